# -*- coding: utf-8 -*-
"""The delta = t d/dt operator and the Hadamard-type fractional derivatives."""
import logging
import math

import numpy as np

from hhbvp.constants import MIN_DELTA_NODES, RECOMMENDED_HILFER_N
from hhbvp.exceptions import FractionalOrderError, GridError
from hhbvp.fraccalc.grid import FracOrder, GridFunction
from hhbvp.fraccalc.quadrature import integrate_grid


logger = logging.getLogger(__name__)

# Fourth-order first-derivative stencils (times 12h).
EDGE_STENCIL = np.array([-25.0, 48.0, -36.0, 16.0, -3.0])
NEAR_EDGE_STENCIL = np.array([-3.0, -10.0, 18.0, -6.0, 1.0])


def _first_derivative(values: np.ndarray, h: float) -> np.ndarray:
    derivative = np.empty_like(values)
    derivative[2:-2] = (values[:-4] - 8.0 * values[1:-3] + 8.0 * values[3:-1] - values[4:])
    derivative[0] = np.dot(EDGE_STENCIL, values[:5])
    derivative[1] = np.dot(NEAR_EDGE_STENCIL, values[:5])
    # right end mirrors the left one
    derivative[-1] = -np.dot(EDGE_STENCIL, values[::-1][:5])
    derivative[-2] = -np.dot(NEAR_EDGE_STENCIL, values[::-1][:5])
    return derivative / (12.0 * h)


def delta_operator(f: GridFunction, repetitions: int = 1) -> GridFunction:
    """delta^n f, i.e. the n-th derivative in u = log t.

    A function singular at t = 1 is differentiated on nodes 1..N only.
    """
    if repetitions < 1 or int(repetitions) != repetitions:
        raise FractionalOrderError('repetitions must be a positive integer, got {!r}'.format(repetitions))
    first = 1 if f.singular_at_left else 0
    values = np.array(f.values[first:])
    if len(values) < MIN_DELTA_NODES:
        raise GridError('delta operator needs at least {} nodes'.format(MIN_DELTA_NODES))
    for _ in range(int(repetitions)):
        values = _first_derivative(values, f.grid.h)
    if first:
        values = np.concatenate(([0.0], values))
    return GridFunction(f.grid, values, f.singular_at_left)


def _integer_order(order: float):
    if not (math.isfinite(order) and order > 0):
        raise FractionalOrderError('derivative order must be positive, got {!r}'.format(order))
    return float(order).is_integer()


def hadamard_derivative(f: GridFunction, order: float) -> GridFunction:
    """delta^n I^(n - order) f with n = ceil(order)."""
    if _integer_order(order):
        return delta_operator(f, int(order))
    n = math.ceil(order)
    return delta_operator(integrate_grid(f, n - order), n)


def caputo_hadamard_derivative(f: GridFunction, order: float) -> GridFunction:
    """I^(n - order) delta^n f with n = ceil(order)."""
    if _integer_order(order):
        return delta_operator(f, int(order))
    n = math.ceil(order)
    return integrate_grid(delta_operator(f, n), n - order)


def hilfer_hadamard_derivative(f: GridFunction, order: FracOrder) -> GridFunction:
    """I^(beta(n - alpha)) delta^n I^((n - alpha)(1 - beta)) f.

    beta = 0 gives the Hadamard derivative and beta = 1 the Caputo-Hadamard
    one. Accuracy is limited by the finite differences; use N >= 64.
    """
    if f.grid.n < RECOMMENDED_HILFER_N:
        logger.warning('Hilfer-Hadamard derivative on N=%d is poorly resolved (N >= %d recommended)',
                       f.grid.n, RECOMMENDED_HILFER_N)
    inner = integrate_grid(f, order.inner_order)
    return integrate_grid(delta_operator(inner, order.n), order.outer_order)
