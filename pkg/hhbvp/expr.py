# -*- coding: utf-8 -*-
"""Expression language for the functions a problem file supplies.

Grammar (whitespace-insensitive)::

    sum     := product (("+" | "-") product)*
    product := unary (("*" | "/") unary)*
    unary   := "-" unary | power
    power   := atom ["^" unary]          (right-associative)
    atom    := NUMBER | NAME | NAME "(" sum ")" | "(" sum ")"

``^`` binds tighter than unary minus, so ``-2^2`` is ``-4`` and
``2^3^2`` is ``2^9``. ``log`` is the natural logarithm. Names are the
variables ``t``, ``x`` and ``u``, the constants ``e`` and ``pi`` and the
functions in :data:`FUNCTIONS`.
"""
import dataclasses
import math
from typing import Iterable, Mapping, Tuple, Union

import numpy as np
from lark import Lark, Transformer, Token
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from hhbvp.exceptions import (
    ArityError, ExpressionDomainError, ExpressionSyntaxError, UnboundVariableError, UnknownIdentifierError,
)


VARIABLES = ('t', 'x', 'u')
CONSTANTS = {'e': math.e, 'pi': math.pi}


def _checked_log(value):
    if np.any(value <= 0):
        raise ExpressionDomainError('log of a non-positive argument')
    return np.log(value)


def _checked_sqrt(value):
    if np.any(value < 0):
        raise ExpressionDomainError('sqrt of a negative argument')
    return np.sqrt(value)


FUNCTIONS = {
    'log': _checked_log,
    'exp': np.exp,
    'sqrt': _checked_sqrt,
    'abs': np.abs,
}

GRAMMAR = r"""
    ?start: sum

    ?sum: product
        | sum "+" product   -> add
        | sum "-" product   -> sub

    ?product: unary
            | product "*" unary   -> mul
            | product "/" unary   -> div

    ?unary: power
          | "-" unary   -> neg

    ?power: atom
          | atom "^" unary   -> pow

    ?atom: NUMBER                  -> number
         | NAME                    -> name
         | NAME "(" [args] ")"     -> call
         | "(" sum ")"

    args: sum ("," sum)*

    NAME: /[A-Za-z_][A-Za-z_0-9]*/

    %import common.NUMBER
    %import common.WS
    %ignore WS
"""

_PARSER = Lark(GRAMMAR, start='start', parser='lalr')

# Binding strength used by the printer.
PREC_SUM, PREC_PRODUCT, PREC_UNARY, PREC_POWER, PREC_ATOM = range(1, 6)
BINARY_PREC = {'+': PREC_SUM, '-': PREC_SUM, '*': PREC_PRODUCT, '/': PREC_PRODUCT, '^': PREC_POWER}


class _Node:
    def __str__(self):
        return pretty(self)


@dataclasses.dataclass(frozen=True)
class Literal(_Node):
    value: float

    @property
    def precedence(self):
        return PREC_UNARY if self.value < 0 else PREC_ATOM


@dataclasses.dataclass(frozen=True)
class Variable(_Node):
    name: str
    precedence = PREC_ATOM


@dataclasses.dataclass(frozen=True)
class Call(_Node):
    function: str
    argument: 'ExprAst'
    precedence = PREC_ATOM


@dataclasses.dataclass(frozen=True)
class Unary(_Node):
    operand: 'ExprAst'
    op: str = '-'
    precedence = PREC_UNARY


@dataclasses.dataclass(frozen=True)
class Binary(_Node):
    op: str
    left: 'ExprAst'
    right: 'ExprAst'

    @property
    def precedence(self):
        return BINARY_PREC[self.op]


ExprAst = Union[Literal, Variable, Call, Unary, Binary]


class _AstBuilder(Transformer):
    def __init__(self, variables):
        super().__init__()
        self.variables = tuple(variables)

    def number(self, children):
        return Literal(float(children[0]))

    def name(self, children):
        token = children[0]
        if str(token) in CONSTANTS:
            return Literal(CONSTANTS[str(token)])
        if str(token) in self.variables:
            return Variable(str(token))
        raise UnknownIdentifierError(str(token), token.start_pos)

    def call(self, children):
        token = children[0]
        arguments = (children[1] if len(children) > 1 else None) or []
        if str(token) not in FUNCTIONS:
            raise UnknownIdentifierError(str(token), token.start_pos)
        if len(arguments) != 1:
            raise ArityError(str(token), 1, len(arguments))
        return Call(str(token), arguments[0])

    def args(self, children):
        return list(children)

    def neg(self, children):
        return Unary(children[0])

    def _binary(op):
        def build(self, children):
            left, right = children
            return Binary(op, left, right)
        return build

    add = _binary('+')
    sub = _binary('-')
    mul = _binary('*')
    div = _binary('/')
    pow = _binary('^')

    del _binary


def _error_position(error: UnexpectedInput, source: str) -> int:
    token = getattr(error, 'token', None)
    if isinstance(error, UnexpectedEOF) or (isinstance(token, Token) and token.type == '$END'):
        return len(source)
    position = getattr(error, 'pos_in_stream', None)
    if position is None and isinstance(token, Token):
        position = token.start_pos
    return len(source) if position is None else position


def parse(source: str, variables: Iterable[str] = VARIABLES) -> ExprAst:
    """Parse ``source`` into an AST.

    ``variables`` restricts the variable names accepted; anything else is an
    unknown identifier.
    """
    if not source or not source.strip():
        raise ExpressionSyntaxError(0, 'empty expression')
    try:
        tree = _PARSER.parse(source)
    except UnexpectedInput as e:
        raise ExpressionSyntaxError(_error_position(e, source), 'unexpected input') from None
    try:
        return _AstBuilder(variables).transform(tree)
    except VisitError as e:
        raise e.orig_exc from None


def _check_finite(value, what):
    if not np.all(np.isfinite(value)):
        raise ExpressionDomainError('non-finite result of {}'.format(what))
    return value


def _evaluate(ast: ExprAst, bindings: Mapping):
    if isinstance(ast, Literal):
        return np.float64(ast.value)
    if isinstance(ast, Variable):
        if ast.name not in bindings:
            raise UnboundVariableError(ast.name)
        return np.asarray(bindings[ast.name], dtype=float)
    if isinstance(ast, Call):
        argument = _evaluate(ast.argument, bindings)
        with np.errstate(all='ignore'):
            return _check_finite(FUNCTIONS[ast.function](argument), '{}()'.format(ast.function))
    if isinstance(ast, Unary):
        return -_evaluate(ast.operand, bindings)
    left = _evaluate(ast.left, bindings)
    right = _evaluate(ast.right, bindings)
    with np.errstate(all='ignore'):
        if ast.op == '+':
            result = left + right
        elif ast.op == '-':
            result = left - right
        elif ast.op == '*':
            result = left * right
        elif ast.op == '/':
            if np.any(right == 0):
                raise ExpressionDomainError('division by zero')
            result = left / right
        else:
            result = np.power(left, right)
    return _check_finite(result, "'{}'".format(ast.op))


def evaluate(ast: ExprAst, bindings: Mapping[str, Union[float, np.ndarray]]):
    """Evaluate ``ast`` under ``bindings``.

    Bindings may be floats or numpy arrays (broadcast together); scalar
    results come back as a Python float.
    """
    result = _evaluate(ast, bindings)
    if np.ndim(result) == 0:
        return float(result)
    return result


def evaluate_on(ast: ExprAst, shape: Tuple[int, ...], bindings: Mapping):
    """Evaluate and broadcast to ``shape`` (constant expressions included)."""
    return np.broadcast_to(np.asarray(evaluate(ast, bindings), dtype=float), shape).copy()


def free_variables(ast: ExprAst) -> frozenset:
    if isinstance(ast, Variable):
        return frozenset([ast.name])
    if isinstance(ast, Literal):
        return frozenset()
    if isinstance(ast, Call):
        return free_variables(ast.argument)
    if isinstance(ast, Unary):
        return free_variables(ast.operand)
    return free_variables(ast.left) | free_variables(ast.right)


def _wrap(ast, needs_parens):
    text = pretty(ast)
    return '({})'.format(text) if needs_parens else text


def pretty(ast: ExprAst) -> str:
    """Render ``ast`` as source text that parses back to an equal AST."""
    if isinstance(ast, Literal):
        return repr(ast.value)
    if isinstance(ast, Variable):
        return ast.name
    if isinstance(ast, Call):
        return '{}({})'.format(ast.function, pretty(ast.argument))
    if isinstance(ast, Unary):
        return '-' + _wrap(ast.operand, ast.operand.precedence < PREC_UNARY)
    if ast.op == '^':
        left = _wrap(ast.left, ast.left.precedence < PREC_ATOM)
        right = _wrap(ast.right, ast.right.precedence < PREC_UNARY)
        return '{}^{}'.format(left, right)
    left = _wrap(ast.left, ast.left.precedence < ast.precedence)
    right = _wrap(ast.right, ast.right.precedence <= ast.precedence)
    return '{} {} {}'.format(left, ast.op, right)
