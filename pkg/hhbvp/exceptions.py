# -*- coding: utf-8 -*-

"""Exceptions for hhbvp."""
import functools
import sys


class HhbvpError(Exception):
    body = ''
    error_code = 1

    def __init__(self, extra_body=''):
        self.extra_body = extra_body

    def __str__(self):
        msg = self.__class__.__name__
        if self.body:
            msg += ': {}'.format(self.body)
        if self.extra_body:
            msg += ('. {}' if self.body else ': {}').format(self.extra_body)
        return msg


class HhbvpEnvironmentError(HhbvpError):
    pass


class ExpressionError(HhbvpError):
    pass


class ExpressionSyntaxError(ExpressionError):
    def __init__(self, position, extra_body=''):
        self.position = position
        message = 'syntax error at offset {}'.format(position)
        super().__init__('{}: {}'.format(message, extra_body) if extra_body else message)


class UnknownIdentifierError(ExpressionError):
    def __init__(self, name, position=None):
        self.name = name
        self.position = position
        where = '' if position is None else ' at offset {}'.format(position)
        super().__init__('unknown identifier "{}"{}'.format(name, where))


class ArityError(ExpressionError):
    def __init__(self, name, expected, given):
        self.name = name
        self.expected = expected
        self.given = given
        super().__init__('{}() takes {} argument(s), {} given'.format(name, expected, given))


class UnboundVariableError(ExpressionError):
    def __init__(self, name):
        self.name = name
        super().__init__('unbound variable "{}"'.format(name))


class ExpressionDomainError(ExpressionError):
    body = 'Domain error'


class FractionalOrderError(HhbvpError):
    body = 'Invalid fractional order'


class GridError(HhbvpError):
    body = 'Invalid grid'


class ProblemValidationError(HhbvpError):
    body = 'Invalid problem'

    def __init__(self, key, extra_body=''):
        self.key = key
        self.detail = extra_body
        super().__init__('{}: {}'.format(key, extra_body) if extra_body else key)


class ProblemFileError(HhbvpError):
    body = 'Invalid problem file'

    def __init__(self, line, key=None, extra_body=''):
        self.line = line
        self.key = key
        where = 'line {}'.format(line)
        if key:
            where += ' ({})'.format(key)
        super().__init__('{}: {}'.format(where, extra_body))


class MissingInputError(HhbvpError):
    body = 'missing input'

    def __init__(self, key):
        self.key = key
        super().__init__(key)

    def __str__(self):
        return '{}: {}'.format(self.body, self.key)


class DegenerateProblemError(HhbvpError):
    body = 'Degenerate problem (lambda = 0)'

    def __init__(self, value, extra_body=''):
        self.value = value
        super().__init__(extra_body or 'lambda = {!r}'.format(value))


class CertificationFailedError(HhbvpError):
    body = 'Certification failed'
    error_code = 2


class SolverNotConvergedError(HhbvpError):
    body = 'Picard iteration did not converge'
    error_code = 3


class SolverDivergenceError(SolverNotConvergedError):
    body = 'Picard iteration diverges'

    def __init__(self, solution, extra_body=''):
        self.solution = solution
        super().__init__(extra_body)


class SelftestFailedError(HhbvpError):
    body = 'Selftest failed'
    error_code = 4


def catch(fn):
    @functools.wraps(fn)
    def wrap(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except HhbvpError as e:
            sys.stderr.write('[Error] hhbvp Exception:\n{}\n'.format(e))
            sys.exit(e.error_code)
    return wrap
