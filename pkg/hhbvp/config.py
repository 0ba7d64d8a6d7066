"""Run settings: CLI flag > problem file > environment > default."""
import dataclasses
from typing import Optional

from hhbvp.constants import DEFAULT_GRID_N, DEFAULT_RESOLUTION, DEFAULT_TOL, DEFAULT_MAX_ITER, MIN_GRID_N
from hhbvp.exceptions import ProblemValidationError
from hhbvp.utils import get_environment_integer, get_environment_float


GRID_N_ENVIRONMENT = 'HHBVP_DEFAULT_N'
RESOLUTION_ENVIRONMENT = 'HHBVP_DEFAULT_RESOLUTION'
TOL_ENVIRONMENT = 'HHBVP_DEFAULT_TOL'
MAX_ITER_ENVIRONMENT = 'HHBVP_DEFAULT_MAX_ITER'


@dataclasses.dataclass(frozen=True)
class RunSettings:
    grid_n: int = DEFAULT_GRID_N
    resolution: int = DEFAULT_RESOLUTION
    tol: float = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER


def _first(*values):
    for value in values:
        if value is not None:
            return value
    return None


def resolve_settings(cli: Optional[dict] = None, file: Optional[dict] = None) -> RunSettings:
    """Merge the settings sources, highest precedence first."""
    cli = {key: value for key, value in (cli or {}).items() if value is not None}
    file = {key: value for key, value in (file or {}).items() if value is not None}
    settings = RunSettings(
        grid_n=int(_first(cli.get('grid_n'), file.get('grid_n'),
                          get_environment_integer(GRID_N_ENVIRONMENT, DEFAULT_GRID_N))),
        resolution=int(_first(cli.get('resolution'), file.get('resolution'),
                              get_environment_integer(RESOLUTION_ENVIRONMENT, DEFAULT_RESOLUTION))),
        tol=float(_first(cli.get('tol'), file.get('tol'),
                         get_environment_float(TOL_ENVIRONMENT, DEFAULT_TOL))),
        max_iter=int(_first(cli.get('max_iter'), file.get('max_iter'),
                            get_environment_integer(MAX_ITER_ENVIRONMENT, DEFAULT_MAX_ITER))),
    )
    validate_settings(settings)
    return settings


def validate_settings(settings: RunSettings):
    if settings.grid_n < MIN_GRID_N:
        raise ProblemValidationError('grid_n', 'must be >= {}, got {}'.format(MIN_GRID_N, settings.grid_n))
    if settings.resolution < 1:
        raise ProblemValidationError('resolution', 'must be positive, got {}'.format(settings.resolution))
    if not settings.tol > 0:
        raise ProblemValidationError('tol', 'must be positive, got {}'.format(settings.tol))
    if settings.max_iter < 1:
        raise ProblemValidationError('max_iter', 'must be positive, got {}'.format(settings.max_iter))
