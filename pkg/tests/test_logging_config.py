import logging
import os
import tempfile
import unittest
from unittest.mock import patch

from hhbvp.logging_config import PACKAGE_LOGGER, level_from_name, setup_logging


class TestSetupLogging(unittest.TestCase):
    def tearDown(self):
        logger = logging.getLogger(PACKAGE_LOGGER)
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()

    @patch.dict(os.environ, {}, clear=True)
    def test_default_level(self):
        logger = setup_logging()
        self.assertEqual(logger.level, logging.WARNING)
        self.assertEqual(len(logger.handlers), 1)
        self.assertFalse(logger.propagate)

    @patch.dict(os.environ, {'HHBVP_LOG_LEVEL': 'debug'})
    def test_environment_level(self):
        self.assertEqual(setup_logging().level, logging.DEBUG)

    def test_explicit_level(self):
        self.assertEqual(setup_logging(level=logging.ERROR).level, logging.ERROR)

    def test_repeated_setup(self):
        setup_logging()
        logger = setup_logging()
        self.assertEqual(len(logger.handlers), 1)

    def test_log_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'hhbvp.log')
            logger = setup_logging(level=logging.INFO, log_file=path)
            logging.getLogger('hhbvp.solver').info('Picard iteration converged')
            for handler in logger.handlers:
                handler.flush()
            self.tearDown()
            with open(path, encoding='utf-8') as file:
                self.assertIn('Picard iteration converged', file.read())


class TestLevelFromName(unittest.TestCase):
    def test_none(self):
        self.assertIsNone(level_from_name(None))

    def test_name(self):
        self.assertEqual(level_from_name('info'), logging.INFO)
