import math
import unittest

import numpy as np

from hhbvp.exceptions import FractionalOrderError, GridError
from hhbvp.fraccalc import FracOrder, Grid, GridFunction


class TestGrid(unittest.TestCase):
    def test_nodes(self):
        grid = Grid(64)
        self.assertEqual(len(grid), 65)
        self.assertEqual(grid.h, 1 / 64)
        self.assertEqual(grid.u[0], 0.0)
        self.assertEqual(grid.u[-1], 1.0)
        self.assertEqual(grid.t[0], 1.0)
        self.assertAlmostEqual(grid.t[-1], math.e, places=15)

    def test_read_only(self):
        with self.assertRaises(ValueError):
            Grid(16).u[0] = 1.0

    def test_invalid(self):
        for n in (15, 0, 16.5):
            with self.subTest(n=n):
                with self.assertRaises(GridError):
                    Grid(n)

    def test_equality(self):
        self.assertEqual(Grid(32), Grid(32))
        self.assertNotEqual(Grid(32), Grid(64))


class TestGridFunction(unittest.TestCase):
    def setUp(self):
        self.grid = Grid(16)

    def test_shape(self):
        with self.assertRaises(GridError):
            GridFunction(self.grid, np.zeros(3))

    def test_finite(self):
        values = np.zeros(17)
        values[3] = np.nan
        with self.assertRaises(GridError):
            GridFunction(self.grid, values)

    def test_singular_left_value(self):
        values = np.arange(17.0) + 1.0
        values[0] = np.inf
        f = GridFunction(self.grid, values, singular_at_left=True)
        self.assertEqual(f.values[0], 2 * values[1] - values[2])
        self.assertFalse(f.left_filled().singular_at_left)
        np.testing.assert_array_equal(f.left_filled().values, f.values)

    def test_immutable(self):
        f = GridFunction.constant(self.grid, 1.0)
        with self.assertRaises(ValueError):
            f.values[0] = 2.0

    def test_input_copied(self):
        values = np.ones(17)
        f = GridFunction(self.grid, values)
        values[0] = 5.0
        self.assertEqual(f.values[0], 1.0)

    def test_from_callable(self):
        f = GridFunction.from_callable(self.grid, np.log)
        np.testing.assert_allclose(f.values, self.grid.u, atol=1e-14)

    def test_from_callable_singular(self):
        f = GridFunction.from_callable(self.grid, lambda t: 1.0 / np.log(t), singular_at_left=True)
        self.assertTrue(f.singular_at_left)
        self.assertAlmostEqual(f.values[1], 16.0)

    def test_norm(self):
        values = np.zeros(17)
        values[0], values[5] = -3.0, 2.0
        f = GridFunction(self.grid, values)
        self.assertEqual(f.norm(), 3.0)
        self.assertEqual(f.norm(interior=True), 2.0)

    def test_arithmetic(self):
        one = GridFunction.constant(self.grid, 1.0)
        two = GridFunction.constant(self.grid, 2.0)
        np.testing.assert_array_equal((one + two).values, np.full(17, 3.0))
        np.testing.assert_array_equal((two - one).values, np.ones(17))
        np.testing.assert_array_equal((3 * one).values, np.full(17, 3.0))
        np.testing.assert_array_equal((-one).values, -np.ones(17))

    def test_different_grids(self):
        with self.assertRaises(GridError):
            GridFunction.zeros(self.grid) + GridFunction.zeros(Grid(32))


class TestFracOrder(unittest.TestCase):
    def test_parameters(self):
        cases = [(1.5, 0.5, 2, 1.75), (1.5, 2 / 3, 2, 11 / 6), (2.0, 0.3, 2, 2.0), (0.5, 1.0, 1, 1.0),
                 (1.5, 0.0, 2, 1.5)]
        for alpha, beta, n, gamma in cases:
            with self.subTest(alpha=alpha, beta=beta):
                order = FracOrder(alpha, beta)
                self.assertEqual(order.n, n)
                self.assertAlmostEqual(order.gamma, gamma, places=15)
                self.assertTrue(order.n - 1 < order.alpha <= order.n)
                self.assertTrue(order.n - 1 < order.gamma <= order.n)

    def test_gamma_exact_at_integer_order(self):
        for step in range(101):
            with self.subTest(beta=step / 100):
                self.assertEqual(FracOrder(2.0, step / 100).gamma, 2.0)
                self.assertEqual(FracOrder(1.0, step / 100).gamma, 1.0)

    def test_stage_orders(self):
        order = FracOrder(1.5, 0.5)
        self.assertEqual(order.inner_order, 0.25)
        self.assertEqual(order.outer_order, 0.25)
        self.assertEqual(FracOrder(1.5, 0.0).outer_order, 0.0)
        self.assertEqual(FracOrder(1.5, 1.0).inner_order, 0.0)

    def test_invalid(self):
        for alpha, beta in ((0.0, 0.5), (-1.0, 0.0), (1.5, 1.5), (1.5, -0.1), (math.inf, 0.0)):
            with self.subTest(alpha=alpha, beta=beta):
                with self.assertRaises(FractionalOrderError):
                    FracOrder(alpha, beta)
