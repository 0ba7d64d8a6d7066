# -*- coding: utf-8 -*-
"""Machine (JSON) and human renderings of a command's results.

Both renderings are produced from the same rounded numbers, so they never
disagree. The machine rendering carries no timestamps and sorts its keys.
"""
import dataclasses
import json
import math
import numbers
from typing import Any, Dict, List

from hhbvp import expr
from hhbvp.constants import REPORT_SIGNIFICANT_DIGITS
from hhbvp.utils import significant


def _clean(value):
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        number = float(value)
        if not math.isfinite(number):
            return repr(number)
        return significant(number, REPORT_SIGNIFICANT_DIGITS)
    if isinstance(value, dict):
        return {str(key): _clean(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(item) for item in value]
    return str(value)


@dataclasses.dataclass
class Report:
    command: str
    sections: Dict[str, Any] = dataclasses.field(default_factory=dict)

    def add(self, name: str, content) -> 'Report':
        self.sections[name] = _clean(content)
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {'command': self.command, **self.sections}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + '\n'

    def render_text(self) -> str:
        lines = ['hhbvp {}'.format(self.command)]
        for name in sorted(self.sections):
            lines.append('')
            lines.append('[{}]'.format(name))
            lines.extend(_render(self.sections[name], 1))
        return '\n'.join(lines) + '\n'


def _format(value) -> str:
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if value is None:
        return '-'
    return str(value)


def _render(content, depth: int) -> List[str]:
    indent = '  ' * depth
    if isinstance(content, dict):
        lines = []
        for key in sorted(content):
            value = content[key]
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                lines.append('{}{}:'.format(indent, key))
                lines.extend(_render(value, depth + 1))
            else:
                lines.append('{}{} = {}'.format(indent, key, _format_flat(value)))
        return lines
    if isinstance(content, list):
        lines = []
        for item in content:
            if isinstance(item, dict):
                lines.append('{}-'.format(indent))
                lines.extend(_render(item, depth + 1))
            else:
                lines.append('{}- {}'.format(indent, _format(item)))
        return lines
    return ['{}{}'.format(indent, _format(content))]


def _is_flat(value) -> bool:
    return isinstance(value, list) and all(not isinstance(item, (dict, list)) for item in value)


def _format_flat(value) -> str:
    if isinstance(value, list):
        return '[{}]'.format(', '.join(_format(item) for item in value))
    if isinstance(value, dict):
        return '{}'
    return _format(value)


def problem_section(problem) -> Dict[str, Any]:
    """Echo of the inputs; expressions are printed back from their ASTs."""
    section = {
        'alpha': problem.alpha,
        'beta': problem.beta,
        'epsilon': problem.epsilon,
        'zeta': list(problem.zeta),
        'nu': list(problem.nu),
        'sigma': list(problem.sigma),
        'f': expr.pretty(problem.f),
    }
    if problem.lipschitz is not None:
        section['C'] = problem.lipschitz
    for key in ('g', 'q', 'vartheta', 'weight'):
        ast = getattr(problem, key)
        if ast is not None:
            section[key] = expr.pretty(ast)
    return section


def certificate_section(certificate) -> Dict[str, Any]:
    return {
        'theorem': certificate.theorem,
        'verdict': certificate.verdict.value,
        'constants': dict(certificate.constants),
        'notes': list(certificate.notes),
        'witness': dict(certificate.witness) if certificate.witness else None,
    }


def solution_section(solution) -> Dict[str, Any]:
    return {
        'converged': solution.converged,
        'iterations': solution.iterations,
        'final_step': solution.step_norms[-1] if solution.step_norms else 0.0,
        'max_ratio': max(solution.ratios) if solution.ratios else 0.0,
        'verdict': solution.verdict,
        'contraction': solution.contraction,
        'ratios_within_bound': solution.ratios_within_bound,
        'norm': solution.x.norm(interior=True),
        'grid_n': solution.x.grid.n,
    }


def residuals_section(residuals) -> Dict[str, Any]:
    return {
        'ode': residuals.ode,
        'boundary_left': residuals.boundary_left,
        'boundary_right': residuals.boundary_right,
        'excluded_nodes': residuals.excluded_nodes,
    }
