# -*- coding: utf-8 -*-
"""Gamma function by the Lanczos approximation (g = 7, nine coefficients).

Relative accuracy is about 1e-13 on (0, 30). Arguments below 1/2 go
through the reflection formula.
"""
import contextlib
import math

from hhbvp.exceptions import FractionalOrderError


LANCZOS_G = 7
LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_coefficients = LANCZOS_COEFFICIENTS


def is_pole(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def gamma(x: float) -> float:
    x = float(x)
    if is_pole(x):
        raise FractionalOrderError('Gamma has a pole at {!r}'.format(x))
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    x -= 1.0
    series = _coefficients[0]
    for i, coefficient in enumerate(_coefficients[1:], start=1):
        series += coefficient / (x + i)
    t = x + LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * t ** (x + 0.5) * math.exp(-t) * series


def rgamma(x: float) -> float:
    """1/Gamma(x); zero at the poles."""
    if is_pole(x):
        return 0.0
    return 1.0 / gamma(x)


@contextlib.contextmanager
def override_coefficients(coefficients):
    """Temporarily swap the Lanczos coefficients (selftest mutation hook)."""
    global _coefficients
    if len(coefficients) != len(LANCZOS_COEFFICIENTS):
        raise ValueError('expected {} coefficients'.format(len(LANCZOS_COEFFICIENTS)))
    previous = _coefficients
    _coefficients = tuple(float(c) for c in coefficients)
    try:
        yield
    finally:
        _coefficients = previous
