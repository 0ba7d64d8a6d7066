# -*- coding: utf-8 -*-
"""Built-in identity suite: quadrature accuracy, inversion identities and
the constants of the two shipped problems."""
import dataclasses
import logging
import math
from typing import Callable, List, Optional

import numpy as np

from hhbvp.bvp_core import compute_constants
from hhbvp.certify import certify_leray_schauder, compute_phi
from hhbvp.fraccalc import (
    FracOrder, Grid, GridFunction, caputo_hadamard_derivative, gamma, hadamard_derivative, hadamard_integral,
    hadamard_integral_grid, hilfer_hadamard_derivative, override_coefficients,
)
from hhbvp.fraccalc.gamma import LANCZOS_COEFFICIENTS
from hhbvp.problem_file import load_problem, packaged_problem_path


logger = logging.getLogger(__name__)

FULL_N = 1024
QUICK_N = 128

# Reference constants of the shipped problems.
GOLDEN = {
    'ex41': {'gamma': 1.75, 'mu1': 0.59779, 'mu2': 1.63780, 'delta1': -1.37703, 'delta2': -3.81518,
             'lam': -2.26164, 'Phi': 3.835201, 'C_Phi': 0.06613554378},
    'ex42': {'gamma': 11.0 / 6.0, 'mu1': -0.395713, 'mu2': -2.865742, 'delta1': 3.65750, 'delta2': 19.04369,
             'lam': -9.990516, 'Phi': 3.414437455, 'L_star': 1.320578171},
}
GOLDEN_TOLERANCE = {'C_Phi': 1e-6, 'L_star': 1e-5}
# Phi of ex42 reproduces to about 6e-6 only
TOLERANCE_OVERRIDES = {('ex42', 'Phi'): 1e-5}

GAMMA_REFERENCE = ((0.5, math.sqrt(math.pi)), (1.0, 1.0), (2.5, 1.329340388179137), (5.0, 24.0),
                   (-0.5, -2.0 * math.sqrt(math.pi)))


@dataclasses.dataclass(frozen=True)
class Check:
    name: str
    error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.error <= self.tolerance)


@dataclasses.dataclass
class SelftestResult:
    checks: List[Check]
    grid_n: int

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [check for check in self.checks if not check.passed]


def _power(grid: Grid, exponent: float, coefficient: float = 1.0, shift: float = 0.0) -> GridFunction:
    return GridFunction(grid, shift + coefficient * grid.u ** exponent)


def _max_error(numerical: GridFunction, exact: GridFunction, first: int = 1) -> float:
    return float(np.max(np.abs(numerical.values[first:] - exact.values[first:])))


def _refined(name: str, residual: Callable[[int], float], n: int, tolerance: float) -> List[Check]:
    """Residual at N below ``tolerance`` and smaller than at N/2."""
    fine, coarse = residual(n), residual(n // 2)
    return [Check(name, fine, tolerance), Check(name + ' (refinement)', fine - coarse, 0.0)]


def gamma_checks() -> List[Check]:
    return [Check('gamma({})'.format(x), abs(gamma(x) - value) / abs(value), 1e-12) for x, value in GAMMA_REFERENCE]


def integral_checks(quick: bool) -> List[Check]:
    resolution = 1024 if quick else 4096
    tolerance = 1e-5 if quick else 1e-6
    checks = []
    for order in (0.5, 1.5, 2.5):
        value = hadamard_integral(lambda t: np.ones_like(t), order, math.e, resolution)
        exact = 1.0 / gamma(order + 1)
        checks.append(Check('I^{} 1 at e'.format(order), abs(value - exact) / exact, tolerance))

    # (log t)^2 is not reproduced exactly by the rule, so the error shows the order
    order = 0.75
    exact = gamma(3) / gamma(3 + order)
    resolutions = (128, 256, 512) if quick else (512, 1024, 2048)
    errors = [abs(hadamard_integral(lambda t: np.log(t) ** 2, order, math.e, r) - exact) for r in resolutions]
    rates = [math.log2(errors[i] / errors[i + 1]) for i in range(2)]
    checks.append(Check('convergence order of I^0.75 (log t)^2', (1.8 if quick else 1.9) - min(rates), 0.0))
    return checks


def inversion_checks(n: int, quick: bool) -> List[Check]:
    tolerance = 5e-2 if quick else 5e-3

    def hadamard_inversion(order):
        def residual(size):
            grid = Grid(size)
            f = _power(grid, 2.5)
            return _max_error(hadamard_integral_grid(hadamard_derivative(f, order), order), f)
        return residual

    def caputo_inversion(size):
        grid = Grid(size)
        f = _power(grid, 2.0, shift=1.0)
        return _max_error(hadamard_integral_grid(caputo_hadamard_derivative(f, 1.5), 1.5), _power(grid, 2.0))

    def reduction(beta, reference):
        def residual(size):
            grid = Grid(size)
            f = _power(grid, 2.5)
            return _max_error(hilfer_hadamard_derivative(f, FracOrder(1.5, beta)), reference(f, 1.5), 0)
        return residual

    checks = []
    for order in (0.5, 1.5):
        checks.extend(_refined('I^a D^a f = f (a={})'.format(order), hadamard_inversion(order), n, tolerance))
    checks.extend(_refined('I^1.5 CD^1.5 f = f - f(1)', caputo_inversion, n, tolerance))
    checks.append(Check('Hilfer beta=0 is Hadamard', reduction(0.0, hadamard_derivative)(n), 1e-12))
    checks.append(Check('Hilfer beta=1 is Caputo-Hadamard', reduction(1.0, caputo_hadamard_derivative)(n), 1e-12))
    return checks


def golden_checks(n: int) -> List[Check]:
    checks = []
    for name, expected in GOLDEN.items():
        problem = load_problem(packaged_problem_path(name)).problem
        constants = compute_constants(problem).as_dict()
        computed = dict(constants, Phi=compute_phi(problem))
        if problem.lipschitz is not None:
            computed['C_Phi'] = problem.lipschitz * computed['Phi']
        if problem.q is not None:
            computed['L_star'] = certify_leray_schauder(problem, Grid(n)).constants.get('L_star', math.inf)
        for key, value in expected.items():
            tolerance = TOLERANCE_OVERRIDES.get((name, key), GOLDEN_TOLERANCE.get(key, 1e-4))
            checks.append(Check('{} {}'.format(name, key), abs(computed[key] - value), tolerance))
    return checks


def run_selftest(quick: bool = False, grid_n: Optional[int] = None, gamma_fault: bool = False) -> SelftestResult:
    """Run the suite at N=1024 (N=128 and looser tolerances when ``quick``).

    ``gamma_fault`` perturbs one Lanczos coefficient for the duration of
    the run; the suite must then fail.
    """
    n = grid_n or (QUICK_N if quick else FULL_N)
    if gamma_fault:
        coefficients = list(LANCZOS_COEFFICIENTS)
        coefficients[1] *= 1.001
        with override_coefficients(coefficients):
            return run_selftest(quick, n)
    checks = gamma_checks() + integral_checks(quick) + inversion_checks(n, quick) + golden_checks(n)
    result = SelftestResult(checks, n)
    for check in result.failures:
        logger.warning('selftest check failed: %s (error %r > %r)', check.name, check.error, check.tolerance)
    return result
