import unittest

import numpy as np
from scipy import special

from hhbvp.exceptions import FractionalOrderError
from hhbvp.fraccalc import (
    FracOrder, Grid, GridFunction, caputo_hadamard_derivative, delta_operator, hadamard_derivative,
    hilfer_hadamard_derivative,
)


def power(grid, exponent, singular_at_left=False):
    values = np.zeros(len(grid))
    values[1:] = grid.u[1:] ** exponent
    if not singular_at_left:
        values[0] = 0.0 ** exponent if exponent > 0 else 1.0
    return GridFunction(grid, values, singular_at_left)


def max_error(result, expected, first=0):
    return float(np.max(np.abs(result.values[first:] - expected[first:])))


class TestDeltaOperator(unittest.TestCase):
    def test_square(self):
        grid = Grid(64)
        self.assertLess(max_error(delta_operator(power(grid, 2.0)), 2 * grid.u), 1e-10)

    def test_constant(self):
        grid = Grid(32)
        self.assertLess(delta_operator(GridFunction.constant(grid, 3.0)).norm(), 1e-12)

    def test_cube_twice(self):
        grid = Grid(64)
        self.assertLess(max_error(delta_operator(power(grid, 3.0), 2), 6 * grid.u), 1e-8)

    def test_fourth_order(self):
        errors = []
        for n in (32, 64):
            grid = Grid(n)
            f = GridFunction.from_callable(grid, lambda t: t)
            errors.append(max_error(delta_operator(f), grid.t))
        self.assertGreater(errors[0] / errors[1], 12.0)

    def test_singular_skips_left_node(self):
        grid = Grid(64)
        f = power(grid, -0.5, singular_at_left=True)
        result = delta_operator(f)
        self.assertTrue(result.singular_at_left)
        self.assertTrue(np.all(np.isfinite(result.values)))
        j = 32
        self.assertAlmostEqual(result.values[j], -0.5 * grid.u[j] ** -1.5, places=4)

    def test_repetitions(self):
        for repetitions in (0, 1.5, -1):
            with self.subTest(repetitions=repetitions):
                with self.assertRaises(FractionalOrderError):
                    delta_operator(GridFunction.zeros(Grid(16)), repetitions)


class TestHadamardDerivative(unittest.TestCase):
    def test_power_rule(self):
        grid = Grid(512)
        result = hadamard_derivative(power(grid, 1.5), 0.5)
        expected = special.gamma(2.5) / special.gamma(2.0) * grid.u
        self.assertLess(max_error(result, expected, grid.n // 8), 1e-3)

    def test_integer_order(self):
        grid = Grid(32)
        self.assertLess(hadamard_derivative(GridFunction.constant(grid, 1.0), 1).norm(), 1e-12)

    def test_degenerate_power(self):
        grid = Grid(512)
        result = hadamard_derivative(power(grid, 0.5), 1.5)
        self.assertLess(np.max(np.abs(result.values[grid.n // 4:])), 1e-2)

    def test_constant_is_not_annihilated(self):
        grid = Grid(256)
        result = hadamard_derivative(GridFunction.constant(grid, 1.0), 0.5)
        expected = np.zeros(len(grid))
        expected[1:] = grid.u[1:] ** -0.5 / special.gamma(0.5)
        self.assertLess(max_error(result, expected, grid.n // 8), 1e-3)

    def test_invalid_order(self):
        with self.assertRaises(FractionalOrderError):
            hadamard_derivative(GridFunction.zeros(Grid(16)), 0.0)


class TestCaputoHadamardDerivative(unittest.TestCase):
    def test_constant(self):
        grid = Grid(64)
        self.assertLess(caputo_hadamard_derivative(GridFunction.constant(grid, 1.0), 0.5).norm(), 1e-12)

    def test_linear(self):
        grid = Grid(128)
        result = caputo_hadamard_derivative(power(grid, 1.0), 0.5)
        self.assertLess(max_error(result, grid.u ** 0.5 / special.gamma(1.5)), 1e-9)

    def test_square(self):
        grid = Grid(256)
        result = caputo_hadamard_derivative(power(grid, 2.0), 1.5)
        self.assertLess(max_error(result, 2 * grid.u ** 0.5 / special.gamma(1.5)), 1e-7)


class TestHilferHadamardDerivative(unittest.TestCase):
    def test_reduces_to_hadamard(self):
        grid = Grid(128)
        f = power(grid, 2.5)
        np.testing.assert_allclose(hilfer_hadamard_derivative(f, FracOrder(1.5, 0.0)).values,
                                   hadamard_derivative(f, 1.5).values, atol=1e-12)

    def test_reduces_to_caputo(self):
        grid = Grid(128)
        f = power(grid, 2.5)
        np.testing.assert_allclose(hilfer_hadamard_derivative(f, FracOrder(1.5, 1.0)).values,
                                   caputo_hadamard_derivative(f, 1.5).values, atol=1e-12)

    def test_annihilates_homogeneous_mode(self):
        order = FracOrder(1.5, 0.5)
        residuals = []
        for n in (128, 512):
            grid = Grid(n)
            result = hilfer_hadamard_derivative(power(grid, order.gamma - 1), order)
            residuals.append(float(np.max(np.abs(result.values[n // 8:]))))
        self.assertLess(residuals[1], residuals[0])
        self.assertLess(residuals[1], 5e-2)

    def test_coarse_grid_warning(self):
        with self.assertLogs('hhbvp.fraccalc.operators', level='WARNING'):
            hilfer_hadamard_derivative(power(Grid(32), 2.0), FracOrder(1.5, 0.5))
