# -*- coding: utf-8 -*-
"""Existence and uniqueness checks for the boundary value problem.

Each checker computes the constants its theorem needs and compares them
with the stated inequalities. Hypotheses on f over continuous domains
are only sampled on a lattice, and the certificate says so.

    banach          C Phi < 1 (unique solution in a ball of radius r)
    boyd_wong       nonlinear contraction Psi(s) = P* s / (P* + s)
    krasnoselskii   C / Gamma(alpha + 1) < 1 plus |f| <= g
    leray_schauder  L > ||q|| vartheta(L) Phi for all L > L*
"""
import dataclasses
import enum
import logging
import math
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy.optimize import bisect

from hhbvp import expr
from hhbvp.bvp_core import Problem, compute_constants
from hhbvp.constants import (
    DEFAULT_GRID_N, DEFAULT_RESOLUTION, LATTICE_SLACK, L_SEARCH_MAX, L_SEARCH_MIN, L_SEARCH_SAMPLES,
    L_SEARCH_TOL, MONOTONE_STEP_SLACK,
)
from hhbvp.exceptions import ExpressionDomainError, MissingInputError, ProblemValidationError
from hhbvp.fraccalc import Grid, gamma, hadamard_integral
from hhbvp.utils import lattice_values, pair_lattice


logger = logging.getLogger(__name__)

BANACH = 'banach'
BOYD_WONG = 'boyd_wong'
KRASNOSELSKII = 'krasnoselskii'
LERAY_SCHAUDER = 'leray_schauder'
THEOREMS = (BANACH, BOYD_WONG, KRASNOSELSKII, LERAY_SCHAUDER)

LATTICE_NOTE = 'hypothesis sampled on t grid nodes x lattice [-10, 10] step 0.5, not proven'


class Verdict(enum.Enum):
    HOLDS = 'holds'
    FAILS = 'fails'
    HEURISTIC = 'heuristic'


@dataclasses.dataclass
class Certificate:
    theorem: str
    constants: Dict[str, float]
    verdict: Verdict
    notes: List[str] = dataclasses.field(default_factory=list)
    witness: Optional[Dict[str, float]] = None

    @property
    def failed(self) -> bool:
        return self.verdict is Verdict.FAILS


@dataclasses.dataclass(frozen=True)
class LatticeSample:
    """Worst point of a sampled inequality lhs <= rhs."""
    excess: float
    witness: Dict[str, float]

    @property
    def violated(self) -> bool:
        return self.excess > 0


def _grid(grid):
    return grid if grid is not None else Grid(DEFAULT_GRID_N)


def _require(problem, *keys):
    attributes = {'C': 'lipschitz'}
    for key in keys:
        if getattr(problem, attributes.get(key, key)) is None:
            raise MissingInputError(key)


def _on_grid(ast, grid, variable='t'):
    return expr.evaluate_on(ast, (len(grid),), {variable: grid.t})


def _boundary_factors(problem: Problem):
    k = compute_constants(problem)
    lam = abs(k.lam)
    integral_factor = (abs(k.gamma - 1) * abs(k.delta1) + abs(k.gamma - 2) * abs(k.delta2)) / lam
    derivative_factor = (abs(k.mu2) + abs(k.mu1)) / lam
    return integral_factor, derivative_factor


def compute_phi(problem: Problem) -> float:
    """Bound of the solution operator's kernel part, in closed form."""
    a = problem.alpha
    integral_factor, derivative_factor = _boundary_factors(problem)
    logs = problem.zeta_logs
    integral_terms = math.log1p(problem.epsilon) ** a + float(np.sum(np.abs(problem.nu) * logs ** a))
    derivative_terms = 1.0 + float(np.sum(np.abs(problem.sigma) * logs ** (a - 1)))
    return (1.0 / gamma(a + 1)
            + integral_factor * integral_terms / gamma(a + 1)
            + derivative_factor * derivative_terms / gamma(a))


def compute_pstar(problem: Problem, w, resolution: int = DEFAULT_RESOLUTION) -> float:
    """P* for the Boyd-Wong check; ``w`` is an expression in t or a callable."""
    weight = w if callable(w) else (lambda t: expr.evaluate(w, {'t': t}))
    a = problem.alpha
    integral_factor, derivative_factor = _boundary_factors(problem)

    def integral(order, t):
        return hadamard_integral(weight, order, t, resolution)

    integral_terms = (integral(a, 1.0 + problem.epsilon)
                      + sum(abs(nu) * integral(a, zeta) for nu, zeta in zip(problem.nu, problem.zeta)))
    derivative_terms = (integral(a - 1, math.e)
                        + sum(abs(sigma) * integral(a - 1, zeta) for sigma, zeta in zip(problem.sigma, problem.zeta)))
    return integral(a, math.e) + integral_factor * integral_terms + derivative_factor * derivative_terms


def _f_on_lattice(problem: Problem, grid: Grid, xs: np.ndarray) -> np.ndarray:
    """f(t_j, x_i) with shape (N + 1, len(xs))."""
    t = grid.t[:, None]
    return expr.evaluate_on(problem.f, (len(grid), len(xs)), {'t': t, 'x': xs[None, :]})


def _worst(excess: np.ndarray, **coordinates) -> LatticeSample:
    index = np.unravel_index(int(np.argmax(excess)), excess.shape)
    witness = {name: float(np.broadcast_to(values, excess.shape)[index]) for name, values in coordinates.items()}
    return LatticeSample(float(excess[index]), witness)


def _lipschitz_sample(problem: Problem, grid: Grid):
    xs = lattice_values()
    values = _f_on_lattice(problem, grid, xs)
    differences = np.abs(values[:, :, None] - values[:, None, :])
    gaps = np.abs(xs[:, None] - xs[None, :])
    np.fill_diagonal(gaps, np.inf)
    quotients = differences / gaps[None, :, :]
    index = np.unravel_index(int(np.argmax(quotients)), quotients.shape)
    witness = {'t': float(grid.t[index[0]]), 'x': float(xs[index[1]]), 'y': float(xs[index[2]])}
    return float(quotients[index]), witness


def estimate_lipschitz(problem: Problem, grid: Optional[Grid] = None) -> float:
    """Largest difference quotient of f in x on the lattice; a lower bound for C."""
    value, _ = _lipschitz_sample(problem, _grid(grid))
    return value


def certify_banach(problem: Problem, grid: Optional[Grid] = None) -> Certificate:
    _require(problem, 'C')
    grid = _grid(grid)
    phi = compute_phi(problem)
    c = problem.lipschitz
    contraction = c * phi
    bound = float(np.max(np.abs(expr.evaluate_on(problem.f, (len(grid),), {'t': grid.t, 'x': 0.0}))))
    sampled, witness = _lipschitz_sample(problem, grid)
    constants = {'C': c, 'Phi': phi, 'C_Phi': contraction, 'P': bound, 'sampled_lipschitz': sampled}
    notes = ['Lipschitz constant user-supplied, checked only against lattice samples',
             'P = max |f(t, 0)| over grid nodes (N={})'.format(grid.n)]
    verdict = Verdict.HOLDS if contraction < 1 else Verdict.FAILS
    if contraction < 1:
        constants['r'] = phi * bound / (1.0 - contraction)
    else:
        notes.append('C Phi = {!r} is not below 1'.format(contraction))
    if sampled > c * (1.0 + LATTICE_SLACK) + LATTICE_SLACK:
        verdict = Verdict.FAILS
        notes.append('Lipschitz condition violated on the lattice: quotient {!r} > C'.format(sampled))
    else:
        witness = None
    logger.info('banach: C Phi = %r, verdict %s', contraction, verdict.value)
    return Certificate(BANACH, constants, verdict, notes, witness)


def _psi(pstar: float, s):
    s = np.asarray(s, dtype=float)
    denominator = pstar + s
    with np.errstate(invalid='ignore', divide='ignore'):
        return np.where(denominator > 0, pstar * s / np.where(denominator > 0, denominator, 1.0), 0.0)


def _boyd_wong_sample(problem: Problem, grid: Grid, weights: np.ndarray, pstar: float, xs: np.ndarray):
    values = _f_on_lattice(problem, grid, xs)
    x, y = pair_lattice(xs)
    first = np.searchsorted(xs, x)
    second = np.searchsorted(xs, y)
    gap = np.abs(x - y)
    lhs = np.abs(values[:, first] - values[:, second])
    rhs = weights[:, None] * gap[None, :] / (pstar + gap[None, :])
    excess = lhs - rhs - LATTICE_SLACK * (1.0 + np.abs(rhs))
    return _worst(excess, t=grid.t[:, None], x=x[None, :], y=y[None, :])


def certify_boyd_wong(problem: Problem, grid: Optional[Grid] = None,
                      resolution: int = DEFAULT_RESOLUTION) -> Certificate:
    """Sample |f(t,x) - f(t,y)| <= w(t) |x - y| / (P* + |x - y|).

    The verdict is taken over all real x, y; the x, y >= 0 quadrant is
    reported as well since the hypothesis is sometimes stated there only.
    """
    _require(problem, 'weight')
    grid = _grid(grid)
    pstar = compute_pstar(problem, problem.weight, resolution)
    weights = _on_grid(problem.weight, grid)
    xs = lattice_values()
    everywhere = _boyd_wong_sample(problem, grid, weights, pstar, xs)
    quadrant = _boyd_wong_sample(problem, grid, weights, pstar, xs[xs >= 0])
    s_values = np.linspace(0.0, 10.0, 101)[1:]
    psi = _psi(pstar, s_values)
    constants = {'P_star': pstar, 'Phi': compute_phi(problem), 'max_excess': everywhere.excess,
                 'max_excess_nonnegative': quadrant.excess, 'psi_at_1': float(_psi(pstar, 1.0))}
    notes = [LATTICE_NOTE, 'weight renamed w to avoid a clash with the forcing phi']
    verdict, witness = Verdict.HEURISTIC, None
    if np.min(weights) < 0:
        verdict = Verdict.FAILS
        notes.append('weight w takes negative values on the grid')
    if float(_psi(pstar, 0.0)) != 0.0 or not np.all(psi < s_values):
        verdict = Verdict.FAILS
        notes.append('Psi(s) < s fails for sampled s > 0')
    if everywhere.violated:
        verdict, witness = Verdict.FAILS, everywhere.witness
        notes.append('nonlinear contraction hypothesis violated on the lattice')
    if quadrant.violated:
        notes.append('violated on the x, y >= 0 quadrant as well')
    elif everywhere.violated:
        notes.append('no violation on the x, y >= 0 quadrant')
    logger.info('boyd_wong: P* = %r, verdict %s', pstar, verdict.value)
    return Certificate(BOYD_WONG, constants, verdict, notes, witness)


def certify_krasnoselskii(problem: Problem, grid: Optional[Grid] = None) -> Certificate:
    _require(problem, 'C', 'g')
    grid = _grid(grid)
    phi = compute_phi(problem)
    g_values = _on_grid(problem.g, grid)
    g_norm = float(np.max(np.abs(g_values)))
    condition = problem.lipschitz / gamma(problem.alpha + 1)
    constants = {'C': problem.lipschitz, 'Phi': phi, 'condition': condition, 'g_norm': g_norm,
                 'r_hat': g_norm * phi}
    notes = [LATTICE_NOTE, 'sup |g| taken over grid nodes (N={})'.format(grid.n)]
    verdict, witness = Verdict.HOLDS, None
    if not condition < 1:
        verdict = Verdict.FAILS
        notes.append('C / Gamma(alpha + 1) = {!r} is not below 1'.format(condition))
    xs = lattice_values()
    values = _f_on_lattice(problem, grid, xs)
    bound = g_values[:, None]
    growth = _worst(np.abs(values) - bound - LATTICE_SLACK * (1.0 + np.abs(bound)),
                    t=grid.t[:, None], x=xs[None, :])
    if growth.violated:
        verdict, witness = Verdict.FAILS, growth.witness
        notes.append('|f(t, x)| <= g(t) violated on the lattice')
    sampled, lipschitz_witness = _lipschitz_sample(problem, grid)
    constants['sampled_lipschitz'] = sampled
    if sampled > problem.lipschitz * (1.0 + LATTICE_SLACK) + LATTICE_SLACK:
        verdict = Verdict.FAILS
        witness = witness or lipschitz_witness
        notes.append('Lipschitz condition violated on the lattice: quotient {!r} > C'.format(sampled))
    logger.info('krasnoselskii: C/Gamma(alpha+1) = %r, verdict %s', condition, verdict.value)
    return Certificate(KRASNOSELSKII, constants, verdict, notes, witness)


def _vartheta(problem: Problem):
    def evaluate(values):
        return expr.evaluate_on(problem.vartheta, np.shape(values), {'u': values})
    return evaluate


def _first_undefined(vartheta, values: np.ndarray) -> Optional[float]:
    """First u in ``values`` where vartheta raises a domain error, or None."""
    try:
        vartheta(values)
        return None
    except ExpressionDomainError:
        pass
    for value in values:
        try:
            vartheta(np.array([value]))
        except ExpressionDomainError:
            return float(value)
    return None


def find_lstar(h, l_max: float = L_SEARCH_MAX, l_tol: float = L_SEARCH_TOL, samples: int = L_SEARCH_SAMPLES):
    """Smallest L* with h(L) > 0 on (L*, l_max]; None when h(l_max) <= 0.

    ``h`` is vectorised. The range is sampled geometrically and the last
    sign change is refined by bisection.
    """
    grid = np.geomspace(min(L_SEARCH_MIN, l_max / 10.0), l_max, samples)
    values = h(grid)
    if values[-1] <= 0:
        return None
    nonpositive = np.flatnonzero(values <= 0)
    if len(nonpositive) == 0:
        return 0.0
    last = int(nonpositive[-1])
    low, high = float(grid[last]), float(grid[last + 1])
    if values[last] == 0:
        return low
    return float(bisect(lambda value: float(h(np.array([value]))[0]), low, high, xtol=l_tol))


def certify_leray_schauder(problem: Problem, grid: Optional[Grid] = None, l_max: float = L_SEARCH_MAX,
                           l_tol: float = L_SEARCH_TOL) -> Certificate:
    _require(problem, 'q', 'vartheta')
    if not (l_max > 0 and l_tol > 0):
        raise ProblemValidationError('l_max', 'L search range and tolerance must be positive')
    grid = _grid(grid)
    phi = compute_phi(problem)
    q_values = _on_grid(problem.q, grid)
    q_norm = float(np.max(np.abs(q_values)))
    vartheta = _vartheta(problem)

    def h(values):
        return values - q_norm * vartheta(values) * phi

    constants = {'Phi': phi, 'q_norm': q_norm, 'l_max': l_max, 'l_tol': l_tol}
    notes = [LATTICE_NOTE, 'sup |q| taken over grid nodes (N={})'.format(grid.n)]
    xs = lattice_values()
    search = np.geomspace(min(L_SEARCH_MIN, l_max / 10.0), l_max, L_SEARCH_SAMPLES)
    undefined = _first_undefined(vartheta, np.concatenate(([0.0], search, np.abs(xs))))
    if undefined is not None:
        notes.append('vartheta is undefined at u = {!r}'.format(undefined))
        logger.info('leray_schauder: vartheta undefined at u = %r, verdict fails', undefined)
        return Certificate(LERAY_SCHAUDER, constants, Verdict.FAILS, notes, {'u': undefined})

    lstar = find_lstar(h, l_max, l_tol)
    verdict, witness = Verdict.HOLDS, None
    if lstar is None:
        verdict = Verdict.FAILS
        notes.append('no L in (0, {!r}] with L > |q| vartheta(L) Phi'.format(l_max))
    else:
        constants['L_star'] = lstar

    sampled = np.concatenate(([0.0], search))
    sampled_values = vartheta(sampled)
    steps = np.diff(sampled_values)
    if np.min(steps) < -MONOTONE_STEP_SLACK or np.min(sampled_values) < 0:
        verdict = Verdict.FAILS
        index = int(np.argmin(sampled_values)) if np.min(sampled_values) < 0 else int(np.argmin(steps)) + 1
        witness = {'u': float(sampled[index])}
        notes.append('vartheta is not nonnegative and nondecreasing on the search range')

    values = _f_on_lattice(problem, grid, xs)
    bound = q_values[:, None] * vartheta(np.abs(xs))[None, :]
    growth = _worst(np.abs(values) - bound - LATTICE_SLACK * (1.0 + np.abs(bound)),
                    t=grid.t[:, None], x=xs[None, :])
    if growth.violated:
        verdict, witness = Verdict.FAILS, growth.witness
        notes.append('|f(t, x)| <= q(t) vartheta(|x|) violated on the lattice')
    logger.info('leray_schauder: L* = %r, verdict %s', lstar, verdict.value)
    return Certificate(LERAY_SCHAUDER, constants, verdict, notes, witness)


def available_theorems(problem: Problem) -> List[str]:
    """Checkers whose inputs the problem carries."""
    available = []
    if problem.lipschitz is not None:
        available.append(BANACH)
    if problem.weight is not None:
        available.append(BOYD_WONG)
    if problem.lipschitz is not None and problem.g is not None:
        available.append(KRASNOSELSKII)
    if problem.q is not None and problem.vartheta is not None:
        available.append(LERAY_SCHAUDER)
    return available


def certify_all(problem: Problem, theorems: Optional[Sequence[str]] = None, grid: Optional[Grid] = None,
                resolution: int = DEFAULT_RESOLUTION, l_max: float = L_SEARCH_MAX,
                l_tol: float = L_SEARCH_TOL) -> List[Certificate]:
    """Run the requested checkers, or every checker whose inputs are present."""
    grid = _grid(grid)
    if theorems is None:
        theorems = available_theorems(problem)
    unknown = [theorem for theorem in theorems if theorem not in THEOREMS]
    if unknown:
        raise ProblemValidationError('theorems', 'unknown checker(s): {}'.format(', '.join(unknown)))
    checkers = {
        BANACH: lambda: certify_banach(problem, grid),
        BOYD_WONG: lambda: certify_boyd_wong(problem, grid, resolution),
        KRASNOSELSKII: lambda: certify_krasnoselskii(problem, grid),
        LERAY_SCHAUDER: lambda: certify_leray_schauder(problem, grid, l_max, l_tol),
    }
    return [checkers[theorem]() for theorem in THEOREMS if theorem in theorems]
