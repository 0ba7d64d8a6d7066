# -*- coding: utf-8 -*-
"""The nonlocal boundary value problem and its linear solution operator.

The problem is

    D^(alpha, beta) x(t) + f(t, x(t)) = 0,        1 < t <= e,
    x(1 + eps) = sum_i nu_i x(zeta_i),
    delta x(e) = sum_i sigma_i delta x(zeta_i),

with D^(alpha, beta) the Hilfer-Hadamard derivative, 1 < alpha <= 2. For a
forcing phi the solution of the linear problem D x + phi = 0 is

    x = -I^alpha phi + c0 (log t)^(gamma - 1) + c1 (log t)^(gamma - 2),

and the nonlinear problem is the fixed point of x -> that formula with
phi = f(t, x).
"""
import dataclasses
import logging
import math
from typing import Optional, Tuple, Union

import numpy as np
from scipy.interpolate import CubicSpline

from hhbvp import expr
from hhbvp.constants import DEGENERATE_LAMBDA_TOL, MODE_FIT_NODES
from hhbvp.exceptions import DegenerateProblemError, ExpressionError, ProblemValidationError
from hhbvp.fraccalc import FracOrder, Grid, GridFunction, delta_operator, hadamard_integral_at, hadamard_integral_grid


logger = logging.getLogger(__name__)

# Variables each expression may use.
EXPRESSION_VARIABLES = {
    'f': ('t', 'x'),
    'g': ('t',),
    'q': ('t',),
    'weight': ('t',),
    'vartheta': ('u',),
}


def _as_expression(key, value):
    if value is None or not isinstance(value, str):
        return value
    try:
        return expr.parse(value, EXPRESSION_VARIABLES[key])
    except ExpressionError as e:
        raise ProblemValidationError(key, str(e))


@dataclasses.dataclass(frozen=True)
class Problem:
    alpha: float
    beta: float
    epsilon: float
    zeta: Tuple[float, ...]
    nu: Tuple[float, ...]
    sigma: Tuple[float, ...]
    f: expr.ExprAst
    lipschitz: Optional[float] = None
    g: Optional[expr.ExprAst] = None
    q: Optional[expr.ExprAst] = None
    vartheta: Optional[expr.ExprAst] = None
    weight: Optional[expr.ExprAst] = None

    def __post_init__(self):
        for key in ('zeta', 'nu', 'sigma'):
            object.__setattr__(self, key, tuple(float(value) for value in getattr(self, key)))
        for key in EXPRESSION_VARIABLES:
            object.__setattr__(self, key, _as_expression(key, getattr(self, key)))
        self.validate()

    @classmethod
    def build(cls, alpha, beta, epsilon, zeta, nu, sigma, f, C=None, g=None, q=None, vartheta=None,
              weight=None) -> 'Problem':
        """Keyword-friendly constructor; expressions may be given as source text."""
        return cls(alpha=float(alpha), beta=float(beta), epsilon=float(epsilon), zeta=zeta, nu=nu,
                   sigma=sigma, f=f, lipschitz=None if C is None else float(C), g=g, q=q,
                   vartheta=vartheta, weight=weight)

    def validate(self):
        if not 1.0 < self.alpha <= 2.0:
            raise ProblemValidationError('alpha', 'must lie in (1, 2], got {!r}'.format(self.alpha))
        if not 0.0 <= self.beta <= 1.0:
            raise ProblemValidationError('beta', 'must lie in [0, 1], got {!r}'.format(self.beta))
        if not 0.0 < self.epsilon < 1.0:
            raise ProblemValidationError('epsilon', 'must lie in (0, 1), got {!r}'.format(self.epsilon))
        if not len(self.zeta) == len(self.nu) == len(self.sigma):
            raise ProblemValidationError('zeta', 'zeta, nu and sigma need equal lengths, got {}, {}, {}'.format(
                len(self.zeta), len(self.nu), len(self.sigma)))
        for point in self.zeta:
            if not 1.0 < point < math.e:
                raise ProblemValidationError('zeta', 'points must lie in (1, e), got {!r}'.format(point))
        for key in ('nu', 'sigma'):
            if not all(math.isfinite(value) for value in getattr(self, key)):
                raise ProblemValidationError(key, 'weights must be finite')
        if self.f is None:
            raise ProblemValidationError('f', 'the nonlinearity is required')
        if self.lipschitz is not None and not (math.isfinite(self.lipschitz) and self.lipschitz >= 0):
            raise ProblemValidationError('C', 'must be a finite number >= 0, got {!r}'.format(self.lipschitz))
        for key, allowed in EXPRESSION_VARIABLES.items():
            ast = getattr(self, key)
            if ast is None:
                continue
            extra = expr.free_variables(ast) - set(allowed)
            if extra:
                raise ProblemValidationError(key, 'may only use {}, found {}'.format(
                    ', '.join(allowed), ', '.join(sorted(extra))))

    @property
    def order(self) -> FracOrder:
        return FracOrder(self.alpha, self.beta)

    @property
    def gamma(self) -> float:
        return self.alpha + self.beta * (2.0 - self.alpha)

    @property
    def zeta_logs(self) -> np.ndarray:
        return np.log(np.array(self.zeta, dtype=float))

    def forcing(self, grid: Grid, x: GridFunction) -> GridFunction:
        """f(t_j, x_j) as a grid function; inherits the singular flag of x."""
        values = expr.evaluate_on(self.f, (len(grid),), {'t': grid.t, 'x': x.values})
        return GridFunction(grid, values, x.singular_at_left)


@dataclasses.dataclass(frozen=True)
class BvpConstants:
    gamma: float
    mu1: float
    mu2: float
    delta1: float
    delta2: float
    lam: float

    def as_dict(self):
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class LinearSolveDetail:
    """Coefficients of the homogeneous modes and the brackets they solve."""
    c0: float
    c1: float
    integral_at_left: float  # I^alpha phi(1 + eps)
    weighted_integrals: float  # sum nu_i I^alpha phi(zeta_i)
    derivative_at_end: float  # I^(alpha-1) phi(e)
    weighted_derivatives: float  # sum sigma_i I^(alpha-1) phi(zeta_i)
    constants: BvpConstants

    @property
    def first_bracket(self) -> float:
        return self.integral_at_left - self.weighted_integrals

    @property
    def second_bracket(self) -> float:
        return self.derivative_at_end - self.weighted_derivatives

    def resubstitution_residuals(self) -> Tuple[float, float]:
        """Relative residuals of the two linear equations c0, c1 solve."""
        k = self.constants
        rows = (
            (k.mu1 * self.c0, k.mu2 * self.c1, self.first_bracket),
            ((k.gamma - 1) * k.delta1 * self.c0, (k.gamma - 2) * k.delta2 * self.c1, self.second_bracket),
        )
        residuals = []
        for first, second, rhs in rows:
            scale = abs(first) + abs(second) + abs(rhs)
            residuals.append(0.0 if scale == 0 else abs(first + second - rhs) / scale)
        return tuple(residuals)


def compute_constants(problem: Problem) -> BvpConstants:
    gamma = problem.gamma
    logs = problem.zeta_logs
    nu = np.array(problem.nu)
    sigma = np.array(problem.sigma)
    left = math.log1p(problem.epsilon)
    mu1 = left ** (gamma - 1) - float(np.sum(nu * logs ** (gamma - 1)))
    mu2 = left ** (gamma - 2) - float(np.sum(nu * logs ** (gamma - 2)))
    delta1 = 1.0 - float(np.sum(sigma * logs ** (gamma - 2)))
    delta2 = 1.0 - float(np.sum(sigma * logs ** (gamma - 3)))
    lam = (gamma - 1) * delta1 * mu2 - (gamma - 2) * delta2 * mu1
    if abs(lam) <= DEGENERATE_LAMBDA_TOL:
        logger.warning('Degenerate problem: lambda = %r', lam)
        raise DegenerateProblemError(lam)
    return BvpConstants(gamma=gamma, mu1=mu1, mu2=mu2, delta1=delta1, delta2=delta2, lam=lam)


def _mode_values(grid: Grid, gamma: float, c0: float, c1: float) -> np.ndarray:
    u = grid.u
    values = np.empty(len(grid))
    values[1:] = c0 * u[1:] ** (gamma - 1) + c1 * u[1:] ** (gamma - 2)
    # (log t)^(gamma - 2) is 1 at t = 1 when gamma = 2 and unbounded below it
    values[0] = c1 if gamma == 2 else 0.0
    return values


def linear_solution(problem: Problem, phi: GridFunction,
                    constants: Optional[BvpConstants] = None) -> Tuple[GridFunction, LinearSolveDetail]:
    """Solution of the linear problem with forcing ``phi``."""
    constants = constants or compute_constants(problem)
    a = problem.alpha
    integral_at_left = hadamard_integral_at(phi, a, 1.0 + problem.epsilon)
    weighted_integrals = sum(nu * hadamard_integral_at(phi, a, zeta)
                             for nu, zeta in zip(problem.nu, problem.zeta))
    derivative_at_end = hadamard_integral_at(phi, a - 1, math.e)
    weighted_derivatives = sum(sigma * hadamard_integral_at(phi, a - 1, zeta)
                               for sigma, zeta in zip(problem.sigma, problem.zeta))

    first = integral_at_left - weighted_integrals
    second = derivative_at_end - weighted_derivatives
    k = constants
    c0 = (k.mu2 * second - (k.gamma - 2) * k.delta2 * first) / k.lam
    c1 = ((k.gamma - 1) * k.delta1 * first - k.mu1 * second) / k.lam
    detail = LinearSolveDetail(c0=c0, c1=c1, integral_at_left=integral_at_left,
                               weighted_integrals=weighted_integrals, derivative_at_end=derivative_at_end,
                               weighted_derivatives=weighted_derivatives, constants=constants)

    integral = np.array(hadamard_integral_grid(phi, a).values)
    integral[0] = 0.0
    values = -integral + _mode_values(phi.grid, k.gamma, c0, c1)
    singular = k.gamma < 2 and c1 != 0
    return GridFunction(phi.grid, values, singular), detail


def apply_rho(problem: Problem, x: GridFunction, constants: Optional[BvpConstants] = None) -> GridFunction:
    """The fixed-point operator: linear solution with forcing f(t, x(t))."""
    solution, _ = linear_solution(problem, problem.forcing(x.grid, x), constants)
    return solution


def _spline(x: GridFunction) -> CubicSpline:
    first = 1 if x.singular_at_left else 0
    return CubicSpline(x.grid.u[first:], x.values[first:])


def evaluate_at(x: GridFunction, t: Union[float, np.ndarray]):
    """Cubic-spline (in u = log t) value of a grid function off the nodes."""
    value = _spline(x)(np.log(t))
    return float(value) if np.ndim(value) == 0 else value


def boundary_residual(problem: Problem, x: GridFunction) -> Tuple[float, float]:
    """Residuals of the two boundary rows."""
    nu = np.array(problem.nu)
    sigma = np.array(problem.sigma)
    spline = _spline(x)
    left = float(spline(math.log1p(problem.epsilon)))
    r1 = left - float(np.sum(nu * spline(problem.zeta_logs)))
    derivative = delta_operator(x, 1)
    r2 = float(derivative.values[-1]) - float(np.sum(sigma * _spline(derivative)(problem.zeta_logs)))
    return r1, r2


def remove_homogeneous_modes(problem: Problem, x: GridFunction) -> GridFunction:
    """Fit c0 (log t)^(gamma-1) + c1 (log t)^(gamma-2) near t = 1 and subtract it.

    Both modes are annihilated by the Hilfer-Hadamard derivative, so this
    leaves the equation residual unchanged while removing the part the
    quadrature cannot resolve at the left end. Only needed for gamma < 2.
    """
    gamma = problem.gamma
    if gamma >= 2:
        return x
    u = x.grid.u[1:MODE_FIT_NODES + 1]
    basis = np.column_stack((u ** (gamma - 2), u ** (gamma - 1), u ** problem.alpha))
    (c1, c0, _), *_ = np.linalg.lstsq(basis, x.values[1:MODE_FIT_NODES + 1], rcond=None)
    logger.debug('Fitted homogeneous modes: c0=%r c1=%r', c0, c1)
    values = x.values - _mode_values(x.grid, gamma, c0, c1)
    return GridFunction(x.grid, values, singular_at_left=True).left_filled()
