# -*- coding: utf-8 -*-
"""Hadamard fractional integrals by the product-trapezoidal rule.

With u = log t the Hadamard integral of order a becomes the Abel
convolution

    (1/Gamma(a)) * int_0^U (U - s)^(a - 1) f(e^s) ds,   U = log t.

f is interpolated linearly in s on each cell and the kernel moments over
the cell are integrated exactly. On a cell with A = U - s_j and
B = U - s_{j+1} the right and left node weights are

    WR = [A (A^a - B^a)/a - (A^(a+1) - B^(a+1))/(a+1)] / h
    WL = (A^a - B^a)/a - WR
"""
import functools
import logging
import math
from typing import Callable

import numpy as np

from hhbvp.exceptions import FractionalOrderError
from hhbvp.fraccalc.gamma import gamma
from hhbvp.fraccalc.grid import GridFunction


logger = logging.getLogger(__name__)


def _check_order(order, allow_zero=False):
    if not math.isfinite(order) or order < 0 or (order == 0 and not allow_zero):
        raise FractionalOrderError('integral order must be positive, got {!r}'.format(order))


@functools.lru_cache(maxsize=64)
def cell_weights(cells: int, order: float):
    """Left/right node weights of the cells at distance m = 1..cells, unit spacing.

    Returned arrays are indexed by m with a zero in slot 0; multiply by
    h**order for spacing h.
    """
    m = np.arange(1, cells + 1, dtype=float)
    a = order
    upper_a, lower_a = m ** a, (m - 1) ** a
    moment = (upper_a - lower_a) / a
    right = m * moment - (m ** (a + 1) - (m - 1) ** (a + 1)) / (a + 1)
    left = moment - right
    wl = np.concatenate(([0.0], left))
    wr = np.concatenate(([0.0], right))
    wl.setflags(write=False)
    wr.setflags(write=False)
    return wl, wr


@functools.lru_cache(maxsize=64)
def endpoint_weights(cells: int, order: float) -> np.ndarray:
    """Weights c_j with int_0^(cells) (cells - s)^(a-1) f(s) ds ~ sum_j c_j f_j (unit spacing)."""
    wl, wr = cell_weights(cells, order)
    distance = cells - np.arange(cells + 1)
    weights = wl[distance].copy()
    weights[1:] += wr[distance[1:] + 1]
    weights.setflags(write=False)
    return weights


def _convolve_nodes(values: np.ndarray, order: float) -> np.ndarray:
    """Integral (without 1/Gamma) at every node of a unit-spaced sample."""
    cells = len(values) - 1
    wl, wr = cell_weights(cells, order)
    # node k: sum_j wl[k-j] f_j + wr[k-j+1] f_j (j >= 1)
    right_nodes = values.copy()
    right_nodes[0] = 0.0
    return np.convolve(wl, values)[:cells + 1] + np.convolve(wr[1:], right_nodes)[:cells + 1]


def hadamard_integral(f: Callable, order: float, t: float, resolution: int) -> float:
    """Hadamard integral of order ``order`` of a callable ``f`` at the point ``t``.

    ``f`` takes an array of t values. The rule runs on ``resolution``
    uniform cells of [0, log t].
    """
    _check_order(order)
    if not t > 1.0:
        raise FractionalOrderError('evaluation point must satisfy t > 1, got {!r}'.format(t))
    if resolution < 1:
        raise FractionalOrderError('resolution must be positive, got {!r}'.format(resolution))
    upper = math.log(t)
    s = np.linspace(0.0, upper, resolution + 1)
    values = np.asarray(f(np.exp(s)), dtype=float)
    values = np.broadcast_to(values, s.shape)
    h = upper / resolution
    total = float(np.dot(endpoint_weights(resolution, float(order)), values))
    return total * h ** order / gamma(order)


def integrate_grid(f: GridFunction, order: float) -> GridFunction:
    """Node-wise integral; order 0 is the identity."""
    _check_order(order, allow_zero=True)
    if order == 0:
        return f
    filled = f.left_filled()
    h = f.grid.h
    values = _convolve_nodes(filled.values, float(order)) * (h ** order / gamma(order))
    values[0] = 0.0
    return GridFunction(f.grid, values, f.singular_at_left)


def hadamard_integral_grid(f: GridFunction, order: float) -> GridFunction:
    """Hadamard integral of a grid function at every node (zero at t = 1)."""
    _check_order(order)
    return integrate_grid(f, order)


def hadamard_integral_at(f: GridFunction, order: float, t: float) -> float:
    """Hadamard integral of a grid function at an arbitrary t in (1, e].

    Whole cells up to the last node below log t, then one partial cell on
    which f is interpolated linearly.
    """
    _check_order(order)
    grid = f.grid
    upper = math.log(t) if t > 0 else -math.inf
    if not 0.0 < upper <= 1.0 + 1e-12:
        raise FractionalOrderError('evaluation point must lie in (1, e], got {!r}'.format(t))
    upper = min(upper, 1.0)
    values = f.left_filled().values
    h = grid.h
    a = float(order)
    k = min(int(math.floor(upper / h)), grid.n)

    # whole cells j = 0..k-1
    s = grid.u[:k + 1]
    big = upper - s[:-1]
    small = np.maximum(upper - s[1:], 0.0)
    moment = (big ** a - small ** a) / a
    right = (big * moment - (big ** (a + 1) - small ** (a + 1)) / (a + 1)) / h
    left = moment - right
    total = float(np.dot(left, values[:k]) + np.dot(right, values[1:k + 1]))

    theta = upper - grid.u[k]
    if k < grid.n and theta > 0:
        slope = (values[k + 1] - values[k]) / h
        total += values[k] * theta ** a / a + slope * theta ** (a + 1) / (a * (a + 1))
    return total / gamma(a)
