"""
Logging configuration for hhbvp.

Reports go to stdout; everything logged here goes to stderr (and
optionally a file) so machine output stays clean.
"""
import logging
import os
import sys
from typing import Optional


PACKAGE_LOGGER = 'hhbvp'
DEFAULT_LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DEFAULT_LOG_LEVEL = logging.WARNING
LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']


def setup_logging(
    level: Optional[int] = None,
    log_file: Optional[str] = None,
    format_string: Optional[str] = None
) -> logging.Logger:
    """Configure the hhbvp logger; HHBVP_LOG_LEVEL and HHBVP_LOG_FILE fill in missing arguments."""
    if level is None:
        level_name = os.environ.get('HHBVP_LOG_LEVEL', 'WARNING').upper()
        level = getattr(logging, level_name, DEFAULT_LOG_LEVEL)

    if log_file is None:
        log_file = os.environ.get('HHBVP_LOG_FILE')

    if format_string is None:
        format_string = DEFAULT_LOG_FORMAT

    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel(level)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(format_string)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        try:
            file_handler = logging.FileHandler(log_file, encoding='utf-8')
            file_handler.setLevel(level)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)
            logger.info('Logging to file: %s', log_file)
        except OSError as e:
            logger.warning('Failed to setup file logging to %s: %s', log_file, e)

    logger.propagate = False
    return logger


def level_from_name(name: Optional[str]) -> Optional[int]:
    """Map a --log-level choice to a logging level; None defers to the environment."""
    if name is None:
        return None
    return getattr(logging, name.upper())
