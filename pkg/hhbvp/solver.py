# -*- coding: utf-8 -*-
"""Picard iteration of the fixed-point operator and residual checks."""
import dataclasses
import logging
from typing import List, Optional

import numpy as np

from hhbvp.bvp_core import Problem, apply_rho, boundary_residual, compute_constants, remove_homogeneous_modes
from hhbvp.certify import Certificate, Verdict, certify_banach
from hhbvp.constants import (
    CONTRACTION_RATIO_SLACK, DEFAULT_GRID_N, DEFAULT_MAX_ITER, DEFAULT_TOL, DIVERGENCE_GROWTH_FACTOR,
    DIVERGENCE_GROWTH_STEPS, ODE_RESIDUAL_EXCLUDED_FRACTION, RECOMMENDED_VERIFY_N,
)
from hhbvp.exceptions import ProblemValidationError, SolverDivergenceError
from hhbvp.fraccalc import Grid, GridFunction, hilfer_hadamard_derivative


logger = logging.getLogger(__name__)

CERTIFIED = 'certified'
UNCERTIFIED = 'uncertified run'


@dataclasses.dataclass
class Solution:
    x: GridFunction
    iterations: int
    step_norms: List[float]
    ratios: List[float]
    converged: bool
    verdict: str = UNCERTIFIED
    contraction: Optional[float] = None
    ratios_within_bound: Optional[bool] = None


@dataclasses.dataclass(frozen=True)
class Residuals:
    ode: float
    boundary_left: float
    boundary_right: float
    excluded_nodes: int


def _certificate(problem: Problem, grid: Grid) -> Optional[Certificate]:
    if problem.lipschitz is None:
        return None
    return certify_banach(problem, grid)


def picard_solve(problem: Problem, x0: Optional[GridFunction] = None, tol: float = DEFAULT_TOL,
                 max_iter: int = DEFAULT_MAX_ITER, grid: Optional[Grid] = None,
                 certificate: Optional[Certificate] = None) -> Solution:
    """Iterate x <- rho(x) from ``x0`` (zero by default) until the step is below ``tol``.

    The step is the max norm over nodes j >= 1. A run that is not backed by a
    holding Banach certificate is still carried out and marked uncertified.
    Raises SolverDivergenceError when the step grows for several iterations
    in a row well past the first step.
    """
    if not tol > 0:
        raise ProblemValidationError('tol', 'must be positive, got {!r}'.format(tol))
    if max_iter < 1:
        raise ProblemValidationError('max_iter', 'must be positive, got {!r}'.format(max_iter))
    if x0 is None:
        x0 = GridFunction.zeros(grid or Grid(DEFAULT_GRID_N))
    grid = x0.grid
    constants = compute_constants(problem)
    certificate = certificate or _certificate(problem, grid)
    certified = certificate is not None and certificate.verdict is Verdict.HOLDS
    contraction = certificate.constants.get('C_Phi') if certificate is not None else None

    x = x0
    steps, ratios = [], []
    growing = 0
    converged = False
    for iteration in range(1, max_iter + 1):
        x_next = apply_rho(problem, x, constants)
        step = float(np.max(np.abs(x_next.interior - x.interior)))
        if steps:
            ratios.append(step / steps[-1] if steps[-1] > 0 else 0.0)
            growing = growing + 1 if step > steps[-1] else 0
        steps.append(step)
        x = x_next
        logger.debug('Picard iteration %d: step %.3e ratio %s', iteration, step,
                     '{:.3e}'.format(ratios[-1]) if ratios else '-')
        if step <= tol:
            converged = True
            break
        if growing >= DIVERGENCE_GROWTH_STEPS and step > DIVERGENCE_GROWTH_FACTOR * steps[0]:
            solution = Solution(x, iteration, steps, ratios, False, CERTIFIED if certified else UNCERTIFIED,
                                contraction)
            logger.warning('Picard iteration diverges after %d iterations (step %.3e)', iteration, step)
            raise SolverDivergenceError(solution, 'step norms {}'.format(
                ', '.join('{:.3e}'.format(value) for value in steps)))

    within = None
    if contraction is not None and contraction < 1:
        within = all(ratio <= contraction + CONTRACTION_RATIO_SLACK for ratio in ratios)
        if not within:
            logger.warning('Empirical contraction ratio %r exceeds C Phi = %r', max(ratios), contraction)
    if not converged:
        logger.warning('Picard iteration stopped after %d iterations (step %.3e > tol %.3e)',
                       len(steps), steps[-1], tol)
    else:
        logger.info('Picard iteration converged in %d iterations', len(steps))
    return Solution(x, len(steps), steps, ratios, converged, CERTIFIED if certified else UNCERTIFIED,
                    contraction, within)


def fixed_point_defect(problem: Problem, x: GridFunction) -> float:
    """||rho(x) - x|| over nodes j >= 1."""
    return float(np.max(np.abs(apply_rho(problem, x).interior - x.interior)))


def verify_solution(problem: Problem, x: GridFunction) -> Residuals:
    """Residuals of the differential equation and both boundary rows.

    Nodes j < N/8 are left out of the equation residual; the homogeneous
    modes are fitted and removed before differentiating.
    """
    grid = x.grid
    if grid.n < RECOMMENDED_VERIFY_N:
        logger.warning('verify_solution on N=%d; N >= %d recommended', grid.n, RECOMMENDED_VERIFY_N)
    forcing = problem.forcing(grid, x)
    smooth = remove_homogeneous_modes(problem, x)
    derivative = hilfer_hadamard_derivative(smooth, problem.order)
    first = -(-grid.n // ODE_RESIDUAL_EXCLUDED_FRACTION)
    ode = float(np.max(np.abs(derivative.values[first:] + forcing.values[first:])))
    left, right = boundary_residual(problem, x)
    return Residuals(ode=ode, boundary_left=left, boundary_right=right, excluded_nodes=first)
