import os
import unittest
from unittest.mock import patch

import numpy as np

from hhbvp.exceptions import HhbvpEnvironmentError
from hhbvp.utils import get_environment_float, get_environment_integer, lattice_values, pair_lattice, significant


class TestGetEnvironmentInteger(unittest.TestCase):
    @patch.dict(os.environ, {}, clear=True)
    def test_default(self):
        self.assertEqual(get_environment_integer('HHBVP_DEFAULT_N', 1024), 1024)

    @patch.dict(os.environ, {'HHBVP_DEFAULT_N': '256'})
    def test_value(self):
        self.assertEqual(get_environment_integer('HHBVP_DEFAULT_N', 1024), 256)

    @patch.dict(os.environ, {'HHBVP_DEFAULT_N': 'many'})
    def test_invalid(self):
        with self.assertRaises(HhbvpEnvironmentError):
            get_environment_integer('HHBVP_DEFAULT_N', 1024)


class TestGetEnvironmentFloat(unittest.TestCase):
    @patch.dict(os.environ, {'HHBVP_DEFAULT_TOL': '1e-8'})
    def test_value(self):
        self.assertEqual(get_environment_float('HHBVP_DEFAULT_TOL', 1e-10), 1e-8)

    @patch.dict(os.environ, {'HHBVP_DEFAULT_TOL': 'small'})
    def test_invalid(self):
        with self.assertRaises(HhbvpEnvironmentError):
            get_environment_float('HHBVP_DEFAULT_TOL', 1e-10)


class TestLattice(unittest.TestCase):
    def test_values(self):
        values = lattice_values()
        self.assertEqual(len(values), 41)
        self.assertEqual(values[0], -10.0)
        self.assertEqual(values[-1], 10.0)
        self.assertIn(0.0, values)

    def test_pairs_skip_diagonal(self):
        x, y = pair_lattice(np.array([0.0, 1.0, 2.0]))
        self.assertEqual(len(x), 6)
        self.assertFalse(np.any(x == y))


class TestSignificant(unittest.TestCase):
    def test_rounding(self):
        self.assertEqual(significant(3.14159265, 3), 3.14)

    def test_passthrough(self):
        self.assertEqual(significant(0.0, 5), 0.0)
        self.assertTrue(np.isinf(significant(float('inf'), 5)))
