# -*- coding: utf-8 -*-

"""Console script for hhbvp."""
import csv
import logging

import click

from hhbvp.bvp_core import compute_constants
from hhbvp.certify import THEOREMS, certify_all, compute_phi
from hhbvp.config import resolve_settings
from hhbvp.constants import L_SEARCH_MAX, L_SEARCH_TOL
from hhbvp.exceptions import (
    CertificationFailedError, ProblemValidationError, SelftestFailedError, SolverDivergenceError,
    SolverNotConvergedError, catch,
)
from hhbvp.fraccalc import Grid
from hhbvp.logging_config import LOG_LEVELS, level_from_name, setup_logging
from hhbvp.problem_file import load_problem
from hhbvp.report import Report, certificate_section, problem_section, residuals_section, solution_section
from hhbvp.selftest import run_selftest
from hhbvp.solver import picard_solve, verify_solution


logger = logging.getLogger(__name__)


def log_level_option(fn):
    return click.option('--log-level', default=None, type=click.Choice(LOG_LEVELS, case_sensitive=False),
                        help='Set logging level. Default: HHBVP_LOG_LEVEL or WARNING')(fn)


def json_option(fn):
    return click.option('--json', 'json_path', type=click.Path(dir_okay=False, writable=True), default=None,
                        help='Also write the machine-readable report to this file.')(fn)


def grid_options(fn):
    fn = click.option('--resolution', type=int, default=None,
                      help='Cells for point evaluation of fractional integrals. Default: 2048.')(fn)
    fn = click.option('--grid-n', type=int, default=None,
                      help='Grid size N. Default: problem file, then HHBVP_DEFAULT_N, then 1024.')(fn)
    return fn


def parse_theorems(value):
    if value is None:
        return None
    theorems = [item.strip() for item in value.split(',') if item.strip()]
    unknown = [item for item in theorems if item not in THEOREMS]
    if unknown:
        raise ProblemValidationError('theorems', 'unknown checker(s) {}; choose from {}'.format(
            ', '.join(unknown), ', '.join(THEOREMS)))
    return theorems


def emit(report: Report, json_path=None):
    click.echo(report.render_text(), nl=False)
    if json_path:
        with open(json_path, 'w', encoding='utf-8') as file:
            file.write(report.to_json())


def write_csv(path, x):
    with open(path, 'w', newline='', encoding='utf-8') as file:
        writer = csv.writer(file, lineterminator='\n')
        writer.writerow(['t', 'u', 'x'])
        for t, u, value in zip(x.grid.t[1:], x.grid.u[1:], x.values[1:]):
            writer.writerow([repr(float(t)), repr(float(u)), repr(float(value))])


def _load(problem_path, **cli_settings):
    document = load_problem(problem_path)
    settings = resolve_settings(cli_settings, document.settings)
    return document, settings


@click.group()
@click.version_option(package_name='hilfer-hadamard-bvp')
def hhbvp():
    """Solve and certify nonlocal boundary value problems for Hilfer-Hadamard
    fractional differential equations on (1, e].

    Exit status: 0 success, 1 invalid input, 2 certification failed,
    3 solver did not converge, 4 selftest failed.
    """


@hhbvp.command()
@click.argument('problem_file', type=click.Path(dir_okay=False))
@json_option
@log_level_option
@catch
def constants(problem_file, json_path, log_level):
    """Print gamma, mu1, mu2, delta1, delta2, lambda and Phi of a problem."""
    setup_logging(level=level_from_name(log_level))
    problem = load_problem(problem_file).problem
    report = Report('constants')
    report.add('problem', problem_section(problem))
    report.add('constants', dict(compute_constants(problem).as_dict(), Phi=compute_phi(problem)))
    emit(report, json_path)


@hhbvp.command()
@click.argument('problem_file', type=click.Path(dir_okay=False))
@click.option('--theorems', default=None,
              help='Comma separated subset of {}. Default: every checker whose inputs '
                   'are present.'.format(', '.join(THEOREMS)))
@click.option('--l-max', type=float, default=L_SEARCH_MAX, show_default=True,
              help='Upper end of the Leray-Schauder L search.')
@click.option('--l-tol', type=float, default=L_SEARCH_TOL, show_default=True,
              help='Bisection tolerance of the Leray-Schauder L search.')
@grid_options
@json_option
@log_level_option
@catch
def certify(problem_file, theorems, l_max, l_tol, grid_n, resolution, json_path, log_level):
    """Check the existence and uniqueness theorems for a problem."""
    setup_logging(level=level_from_name(log_level))
    theorems = parse_theorems(theorems)
    document, settings = _load(problem_file, grid_n=grid_n, resolution=resolution)
    problem = document.problem
    certificates = certify_all(problem, theorems, Grid(settings.grid_n), settings.resolution, l_max, l_tol)
    report = Report('certify')
    report.add('problem', problem_section(problem))
    report.add('constants', dict(compute_constants(problem).as_dict(), Phi=compute_phi(problem)))
    report.add('certificates', [certificate_section(certificate) for certificate in certificates])
    emit(report, json_path)
    failed = [certificate.theorem for certificate in certificates if certificate.failed]
    if failed:
        raise CertificationFailedError(', '.join(failed))


@hhbvp.command()
@click.argument('problem_file', type=click.Path(dir_okay=False))
@click.option('--tol', type=float, default=None, help='Picard step tolerance. Default: 1e-10.')
@click.option('--max-iter', type=int, default=None, help='Maximum Picard iterations. Default: 200.')
@click.option('--csv', 'csv_path', type=click.Path(dir_okay=False, writable=True), default=None,
              help='Write the solution as t,u,x rows (nodes j >= 1) to this file.')
@grid_options
@json_option
@log_level_option
@catch
def solve(problem_file, tol, max_iter, csv_path, grid_n, resolution, json_path, log_level):
    """Solve a problem by Picard iteration and report the residuals."""
    setup_logging(level=level_from_name(log_level))
    document, settings = _load(problem_file, grid_n=grid_n, resolution=resolution, tol=tol, max_iter=max_iter)
    problem = document.problem
    report = Report('solve')
    report.add('problem', problem_section(problem))
    try:
        solution = picard_solve(problem, tol=settings.tol, max_iter=settings.max_iter, grid=Grid(settings.grid_n))
    except SolverDivergenceError as e:
        report.add('solution', dict(solution_section(e.solution), step_norms=e.solution.step_norms))
        emit(report, json_path)
        raise
    report.add('solution', solution_section(solution))
    report.add('residuals', residuals_section(verify_solution(problem, solution.x)))
    emit(report, json_path)
    if csv_path:
        write_csv(csv_path, solution.x)
    if not solution.converged:
        raise SolverNotConvergedError('step {:.3e} > tol {:.3e} after {} iterations'.format(
            solution.step_norms[-1], settings.tol, solution.iterations))


@hhbvp.command()
@click.option('--quick', is_flag=True, help='Run the reduced suite on N=128 with looser tolerances.')
@click.option('--inject-gamma-fault', is_flag=True, hidden=True)
@json_option
@log_level_option
@catch
def selftest(quick, inject_gamma_fault, json_path, log_level):
    """Run the built-in identity and golden-value suite."""
    setup_logging(level=level_from_name(log_level))
    result = run_selftest(quick=quick, gamma_fault=inject_gamma_fault)
    report = Report('selftest')
    report.add('summary', {'grid_n': result.grid_n, 'passed': result.passed, 'checks': len(result.checks),
                           'failures': len(result.failures)})
    report.add('checks', [{'name': check.name, 'error': check.error, 'tolerance': check.tolerance,
                           'passed': check.passed} for check in result.checks])
    emit(report, json_path)
    if not result.passed:
        raise SelftestFailedError(', '.join(check.name for check in result.failures))


cli = hhbvp
