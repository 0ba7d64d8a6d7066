import math
import unittest

import numpy as np

from hhbvp import expr
from hhbvp.exceptions import (
    ArityError, ExpressionDomainError, ExpressionSyntaxError, UnboundVariableError, UnknownIdentifierError,
)

EXAMPLE_F = '(1+log(t))/(t+1)^2 * (abs(x)+1)/(3+abs(x))'


class TestParse(unittest.TestCase):
    def test_variable(self):
        self.assertEqual(expr.parse('t'), expr.Variable('t'))

    def test_constants(self):
        self.assertEqual(expr.parse('e'), expr.Literal(math.e))
        self.assertEqual(expr.parse('pi'), expr.Literal(math.pi))

    def test_example_nonlinearity(self):
        ast = expr.parse(EXAMPLE_F)
        self.assertIsInstance(ast, expr.Binary)
        self.assertEqual(ast.op, '/')
        self.assertEqual(expr.free_variables(ast), frozenset({'t', 'x'}))

    def test_power_is_right_associative(self):
        self.assertEqual(expr.parse('2^3^2'),
                         expr.Binary('^', expr.Literal(2.0), expr.Binary('^', expr.Literal(3.0), expr.Literal(2.0))))

    def test_power_binds_tighter_than_minus(self):
        self.assertEqual(expr.parse('-2^2'), expr.Unary(expr.Binary('^', expr.Literal(2.0), expr.Literal(2.0))))

    def test_unclosed_call(self):
        with self.assertRaises(ExpressionSyntaxError) as context:
            expr.parse('log(')
        self.assertEqual(context.exception.position, 4)

    def test_syntax_error_offset(self):
        with self.assertRaises(ExpressionSyntaxError) as context:
            expr.parse('1 + * 2')
        self.assertEqual(context.exception.position, 4)

    def test_empty(self):
        for source in ('', '   '):
            with self.subTest(source=source):
                with self.assertRaises(ExpressionSyntaxError):
                    expr.parse(source)

    def test_unknown_identifier(self):
        with self.assertRaises(UnknownIdentifierError) as context:
            expr.parse('t + y')
        self.assertEqual(context.exception.name, 'y')
        self.assertEqual(context.exception.position, 4)

    def test_unknown_function(self):
        with self.assertRaises(UnknownIdentifierError):
            expr.parse('sin(t)')

    def test_restricted_variables(self):
        with self.assertRaises(UnknownIdentifierError):
            expr.parse('x + t', variables=('t',))

    def test_arity(self):
        for source, given in (('log()', 0), ('log(t, x)', 2)):
            with self.subTest(source=source):
                with self.assertRaises(ArityError) as context:
                    expr.parse(source)
                self.assertEqual(context.exception.given, given)


class TestEvaluate(unittest.TestCase):
    def evaluate(self, source, **bindings):
        return expr.evaluate(expr.parse(source), bindings)

    def test_identity(self):
        self.assertEqual(self.evaluate('x', x=0.0), 0.0)

    def test_precedence(self):
        self.assertEqual(self.evaluate('2+3*4'), 14.0)
        self.assertEqual(self.evaluate('2^3^2'), 512.0)
        self.assertEqual(self.evaluate('-2^2'), -4.0)
        self.assertEqual(self.evaluate('8/4/2'), 1.0)
        self.assertEqual(self.evaluate('8-4-2'), 2.0)

    def test_example_nonlinearity(self):
        self.assertAlmostEqual(self.evaluate(EXAMPLE_F, t=1.0, x=0.0), 1.0 / 12.0, places=15)

    def test_growth_bound_at_e(self):
        self.assertAlmostEqual(self.evaluate('1+log(t)', t=math.e), 2.0, places=15)

    def test_returns_float(self):
        self.assertIsInstance(self.evaluate('t', t=2.0), float)

    def test_vectorised(self):
        t = np.array([1.0, 2.0, 3.0])
        np.testing.assert_allclose(self.evaluate('t^2 + x', t=t, x=1.0), t ** 2 + 1.0)

    def test_broadcast_constant(self):
        np.testing.assert_array_equal(expr.evaluate_on(expr.parse('3'), (4,), {}), np.full(4, 3.0))

    def test_deterministic(self):
        ast = expr.parse(EXAMPLE_F)
        t = np.linspace(1.0, math.e, 33)
        first = expr.evaluate(ast, {'t': t, 'x': 0.5})
        second = expr.evaluate(ast, {'t': t, 'x': 0.5})
        self.assertEqual(first.tobytes(), second.tobytes())

    def test_unbound(self):
        with self.assertRaises(UnboundVariableError):
            self.evaluate('x + 1')

    def test_domain_errors(self):
        cases = [('log(x)', 0.0), ('log(x)', -1.0), ('sqrt(x)', -1.0), ('1/x', 0.0), ('exp(x)', 1000.0)]
        for source, x in cases:
            with self.subTest(source=source, x=x):
                with self.assertRaises(ExpressionDomainError):
                    self.evaluate(source, x=x)

    def test_domain_error_elementwise(self):
        with self.assertRaises(ExpressionDomainError):
            self.evaluate('log(x)', x=np.array([1.0, 0.0]))


class TestPretty(unittest.TestCase):
    def test_round_trip(self):
        sources = [EXAMPLE_F, '2^3^2', '(2^3)^2', '-2^2', '(-2)^2', '1 - (2 - 3)', '1 - 2 - 3', 'x^-2',
                   '-(t + 1)', '(sqrt(t) + 2*log(t)) / (2*exp(t)*(3 + t)^2)', 'u/12 + 1/12',
                   '--x', '2 * -x']
        for source in sources:
            with self.subTest(source=source):
                ast = expr.parse(source)
                self.assertEqual(expr.parse(expr.pretty(ast)), ast)

    def test_str(self):
        self.assertEqual(str(expr.parse('1 + t*x')), '1.0 + t * x')

    def test_minimal_parentheses(self):
        self.assertEqual(expr.pretty(expr.parse('(1 - 2) - 3')), '1.0 - 2.0 - 3.0')
        self.assertEqual(expr.pretty(expr.parse('1 - (2 - 3)')), '1.0 - (2.0 - 3.0)')
