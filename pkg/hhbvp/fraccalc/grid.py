# -*- coding: utf-8 -*-
"""Log-uniform grid on [1, e] and the functions sampled on it.

Node j sits at u_j = j/N in the logarithmic coordinate u = log t, so
t_j = exp(u_j) runs from 1 to e.
"""
import dataclasses
import functools
import math
from typing import Callable

import numpy as np

from hhbvp.constants import MIN_GRID_N
from hhbvp.exceptions import FractionalOrderError, GridError


@dataclasses.dataclass(frozen=True)
class Grid:
    n: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < MIN_GRID_N:
            raise GridError('grid needs an integer N >= {}, got {!r}'.format(MIN_GRID_N, self.n))
        object.__setattr__(self, 'n', int(self.n))

    @property
    def h(self) -> float:
        return 1.0 / self.n

    @functools.cached_property
    def u(self) -> np.ndarray:
        u = np.arange(self.n + 1) / self.n
        u.setflags(write=False)
        return u

    @functools.cached_property
    def t(self) -> np.ndarray:
        t = np.exp(self.u)
        t.setflags(write=False)
        return t

    def __len__(self):
        return self.n + 1


@dataclasses.dataclass(frozen=True, eq=False)
class GridFunction:
    """Samples v_j, j = 0..N.

    When ``singular_at_left`` is set the function is unbounded at t = 1 and
    v_0 carries no information: it is always stored as the linear
    extrapolation 2 v_1 - v_2 so quadratures can use it as a node value.
    """
    grid: Grid
    values: np.ndarray
    singular_at_left: bool = False

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.shape != (len(self.grid),):
            raise GridError('expected {} values, got shape {}'.format(len(self.grid), values.shape))
        if self.singular_at_left:
            values[0] = 2.0 * values[1] - values[2]
        if not np.all(np.isfinite(values)):
            raise GridError('grid function values must be finite')
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)
        object.__setattr__(self, 'singular_at_left', bool(self.singular_at_left))

    @classmethod
    def from_callable(cls, grid: Grid, fn: Callable, singular_at_left: bool = False) -> 'GridFunction':
        """Sample ``fn(t)`` (vectorised over t) on the grid; node 0 is skipped when singular."""
        values = np.zeros(len(grid))
        if singular_at_left:
            values[1:] = fn(grid.t[1:])
        else:
            values[:] = fn(grid.t)
        return cls(grid, values, singular_at_left)

    @classmethod
    def constant(cls, grid: Grid, value: float) -> 'GridFunction':
        return cls(grid, np.full(len(grid), float(value)))

    @classmethod
    def zeros(cls, grid: Grid) -> 'GridFunction':
        return cls.constant(grid, 0.0)

    @property
    def interior(self) -> np.ndarray:
        """Values at nodes j >= 1."""
        return self.values[1:]

    def norm(self, interior: bool = False) -> float:
        """Max norm over the stored nodes (j >= 1 only if singular or asked for)."""
        if interior or self.singular_at_left:
            return float(np.max(np.abs(self.interior)))
        return float(np.max(np.abs(self.values)))

    def left_filled(self) -> 'GridFunction':
        if not self.singular_at_left:
            return self
        return GridFunction(self.grid, self.values)

    def with_values(self, values, singular_at_left=None) -> 'GridFunction':
        if singular_at_left is None:
            singular_at_left = self.singular_at_left
        return GridFunction(self.grid, values, singular_at_left)

    def _check_grid(self, other):
        if other.grid != self.grid:
            raise GridError('grid functions live on different grids (N={} and N={})'.format(
                self.grid.n, other.grid.n))

    def __add__(self, other):
        if not isinstance(other, GridFunction):
            return NotImplemented
        self._check_grid(other)
        return GridFunction(self.grid, self.values + other.values,
                            self.singular_at_left or other.singular_at_left)

    def __sub__(self, other):
        if not isinstance(other, GridFunction):
            return NotImplemented
        self._check_grid(other)
        return GridFunction(self.grid, self.values - other.values,
                            self.singular_at_left or other.singular_at_left)

    def __mul__(self, scalar):
        if isinstance(scalar, GridFunction):
            return NotImplemented
        return GridFunction(self.grid, self.values * float(scalar), self.singular_at_left)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1.0

    def __repr__(self):
        return 'GridFunction(N={}, singular_at_left={})'.format(self.grid.n, self.singular_at_left)


@dataclasses.dataclass(frozen=True)
class FracOrder:
    """Order alpha and type beta of a Hilfer-Hadamard derivative.

    n = ceil(alpha), so n - 1 < alpha <= n holds for integer alpha too.
    """
    alpha: float
    beta: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha > 0):
            raise FractionalOrderError('alpha must be positive, got {!r}'.format(self.alpha))
        if not 0.0 <= self.beta <= 1.0:
            raise FractionalOrderError('beta must lie in [0, 1], got {!r}'.format(self.beta))

    @property
    def n(self) -> int:
        return math.ceil(self.alpha)

    @property
    def gamma(self) -> float:
        return self.alpha + self.beta * (self.n - self.alpha)

    @property
    def inner_order(self) -> float:
        return (self.n - self.alpha) * (1.0 - self.beta)

    @property
    def outer_order(self) -> float:
        return self.beta * (self.n - self.alpha)
