import os

import numpy as np

from hhbvp.constants import LATTICE_X_MIN, LATTICE_X_MAX, LATTICE_X_STEP
from hhbvp.exceptions import HhbvpEnvironmentError


def get_environment_integer(environment_name: str, default_value: int):
    """Get an integer from an environment variable.

    :param environment_name: Environment variable name
    :param default_value: Default value if the environment variable is not set
    :return: Integer value
    """
    value = os.environ.get(environment_name, default_value)
    try:
        return int(value)
    except ValueError:
        raise HhbvpEnvironmentError(
            f"Environment variable {environment_name} must be an integer, got {value!r}"
        )


def get_environment_float(environment_name: str, default_value: float):
    """Get a float from an environment variable."""
    value = os.environ.get(environment_name, default_value)
    try:
        return float(value)
    except ValueError:
        raise HhbvpEnvironmentError(
            f"Environment variable {environment_name} must be a number, got {value!r}"
        )


def lattice_values(x_min=LATTICE_X_MIN, x_max=LATTICE_X_MAX, step=LATTICE_X_STEP):
    """Sampling lattice for the state variable, endpoints included."""
    count = int(round((x_max - x_min) / step)) + 1
    return np.linspace(x_min, x_max, count)


def pair_lattice(values):
    """All ordered pairs (x, y) with x != y, as two flat arrays."""
    xs, ys = np.meshgrid(values, values, indexing='ij')
    mask = xs != ys
    return xs[mask], ys[mask]


def significant(value, digits):
    """Round a float to ``digits`` significant digits (non-finite values pass through)."""
    value = float(value)
    if value == 0.0 or not np.isfinite(value):
        return value
    return float('{:.{}g}'.format(value, digits))
