# -*- coding: utf-8 -*-
"""Reader for ``.problem`` files.

One ``key = value`` assignment per line, ``#`` starts a comment::

    alpha = 3/2
    zeta = [3/2, 7/4]
    f = "(1 + log(t)) / (t + 1)^2 * (abs(x) + 1) / (3 + abs(x))"

Numbers may be constant expressions (``3/(64*e)``); arrays are bracketed
and comma separated; functions are quoted expressions.
"""
import dataclasses
import logging
import os
from typing import Dict, Optional

from hhbvp import expr
from hhbvp.bvp_core import EXPRESSION_VARIABLES, Problem
from hhbvp.exceptions import ExpressionError, ProblemFileError, ProblemValidationError


logger = logging.getLogger(__name__)

PROBLEMS_DIRECTORY = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'problems')

NUMBER_KEYS = ('alpha', 'beta', 'epsilon', 'C')
ARRAY_KEYS = ('zeta', 'nu', 'sigma')
EXPRESSION_KEYS = tuple(EXPRESSION_VARIABLES)
SETTING_KEYS = {'grid_n': int, 'resolution': int, 'tol': float, 'max_iter': int}
REQUIRED_KEYS = ('alpha', 'beta', 'epsilon', 'zeta', 'nu', 'sigma', 'f')
KNOWN_KEYS = NUMBER_KEYS + ARRAY_KEYS + EXPRESSION_KEYS + tuple(SETTING_KEYS)


@dataclasses.dataclass
class ProblemFile:
    problem: Problem
    settings: Dict[str, float]
    sources: Dict[str, str]
    path: Optional[str] = None


def packaged_problem_path(name: str) -> str:
    """Path of a problem file shipped with the package (``ex41``, ``ex42``)."""
    filename = name if name.endswith('.problem') else '{}.problem'.format(name)
    return os.path.join(PROBLEMS_DIRECTORY, filename)


def _strip_comment(text: str) -> str:
    quoted = False
    for index, char in enumerate(text):
        if char == '"':
            quoted = not quoted
        elif char == '#' and not quoted:
            return text[:index]
    return text


def _unquote(text: str, line: int, key: str) -> str:
    if len(text) >= 2 and text[0] == text[-1] == '"':
        return text[1:-1]
    if '"' in text:
        raise ProblemFileError(line, key, 'unbalanced quotes')
    return text


def _number(text: str, line: int, key: str) -> float:
    try:
        return expr.evaluate(expr.parse(_unquote(text, line, key), variables=()), {})
    except ExpressionError as e:
        raise ProblemFileError(line, key, 'not a number: {}'.format(e))


def _split_items(text: str):
    items, depth, current = [], 0, ''
    for char in text:
        if char == '(':
            depth += 1
        elif char == ')':
            depth -= 1
        if char == ',' and depth == 0:
            items.append(current)
            current = ''
        else:
            current += char
    items.append(current)
    return [item.strip() for item in items]


def _array(text: str, line: int, key: str):
    if not (text.startswith('[') and text.endswith(']')):
        raise ProblemFileError(line, key, 'expected a bracketed array like [1, 2]')
    body = text[1:-1].strip()
    if not body:
        return ()
    items = _split_items(body)
    if any(not item for item in items):
        raise ProblemFileError(line, key, 'empty array element')
    return tuple(_number(item, line, key) for item in items)


def _expression(text: str, line: int, key: str):
    try:
        return expr.parse(_unquote(text, line, key), EXPRESSION_VARIABLES[key])
    except ExpressionError as e:
        raise ProblemFileError(line, key, str(e))


def _setting(text: str, line: int, key: str):
    value = _number(text, line, key)
    if SETTING_KEYS[key] is int:
        if not float(value).is_integer():
            raise ProblemFileError(line, key, 'expected an integer, got {!r}'.format(value))
        return int(value)
    return value


def parse_problem(text: str, path: Optional[str] = None) -> ProblemFile:
    values, sources, lines = {}, {}, {}
    for number, raw in enumerate(text.splitlines(), start=1):
        content = _strip_comment(raw).strip()
        if not content:
            continue
        if '=' not in content:
            raise ProblemFileError(number, None, 'expected "key = value"')
        key, _, value = content.partition('=')
        key, value = key.strip(), value.strip()
        if key not in KNOWN_KEYS:
            raise ProblemFileError(number, key, 'unknown key')
        if key in lines:
            raise ProblemFileError(number, key, 'duplicate key (first set on line {})'.format(lines[key]))
        if not value:
            raise ProblemFileError(number, key, 'missing value')
        lines[key] = number
        sources[key] = value
        if key in ARRAY_KEYS:
            values[key] = _array(value, number, key)
        elif key in EXPRESSION_KEYS:
            values[key] = _expression(value, number, key)
        elif key in SETTING_KEYS:
            values[key] = _setting(value, number, key)
        else:
            values[key] = _number(value, number, key)

    missing = [key for key in REQUIRED_KEYS if key not in values]
    if missing:
        raise ProblemValidationError(missing[0], 'required key missing')
    try:
        problem = Problem(alpha=values['alpha'], beta=values['beta'], epsilon=values['epsilon'],
                          zeta=values['zeta'], nu=values['nu'], sigma=values['sigma'], f=values['f'],
                          lipschitz=values.get('C'), g=values.get('g'), q=values.get('q'),
                          vartheta=values.get('vartheta'), weight=values.get('weight'))
    except ProblemValidationError as e:
        line = lines.get(e.key)
        if line is None:
            raise
        raise ProblemFileError(line, e.key, e.detail)
    settings = {key: values[key] for key in SETTING_KEYS if key in values}
    logger.debug('Parsed problem file %s', path or '<string>')
    return ProblemFile(problem=problem, settings=settings, sources=sources, path=path)


def load_problem(path: str) -> ProblemFile:
    try:
        with open(path, encoding='utf-8') as file:
            text = file.read()
    except OSError as e:
        raise ProblemValidationError('file', 'cannot read {}: {}'.format(path, e.strerror))
    return parse_problem(text, path)
