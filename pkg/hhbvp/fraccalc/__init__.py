"""Hadamard-type fractional calculus on the log-uniform grid over [1, e]."""
from hhbvp.fraccalc.gamma import gamma, rgamma, override_coefficients
from hhbvp.fraccalc.grid import FracOrder, Grid, GridFunction
from hhbvp.fraccalc.operators import (
    caputo_hadamard_derivative, delta_operator, hadamard_derivative, hilfer_hadamard_derivative,
)
from hhbvp.fraccalc.quadrature import (
    hadamard_integral, hadamard_integral_at, hadamard_integral_grid, integrate_grid,
)

__all__ = [
    'FracOrder', 'Grid', 'GridFunction',
    'gamma', 'rgamma', 'override_coefficients',
    'delta_operator', 'hadamard_derivative', 'caputo_hadamard_derivative', 'hilfer_hadamard_derivative',
    'hadamard_integral', 'hadamard_integral_at', 'hadamard_integral_grid', 'integrate_grid',
]
