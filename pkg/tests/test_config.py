import os
import unittest
from unittest.mock import patch

from hhbvp.config import RunSettings, resolve_settings
from hhbvp.constants import DEFAULT_GRID_N, DEFAULT_MAX_ITER, DEFAULT_RESOLUTION, DEFAULT_TOL
from hhbvp.exceptions import HhbvpEnvironmentError, ProblemValidationError


@patch.dict(os.environ, {}, clear=True)
class TestResolveSettings(unittest.TestCase):
    def test_defaults(self):
        self.assertEqual(resolve_settings(), RunSettings(DEFAULT_GRID_N, DEFAULT_RESOLUTION, DEFAULT_TOL,
                                                         DEFAULT_MAX_ITER))

    def test_environment(self):
        with patch.dict(os.environ, {'HHBVP_DEFAULT_N': '256', 'HHBVP_DEFAULT_TOL': '1e-6'}):
            settings = resolve_settings()
        self.assertEqual(settings.grid_n, 256)
        self.assertEqual(settings.tol, 1e-6)

    def test_file_over_environment(self):
        with patch.dict(os.environ, {'HHBVP_DEFAULT_N': '256'}):
            self.assertEqual(resolve_settings(file={'grid_n': 512}).grid_n, 512)

    def test_cli_over_file(self):
        settings = resolve_settings(cli={'grid_n': 128, 'max_iter': None}, file={'grid_n': 512, 'max_iter': 7})
        self.assertEqual(settings.grid_n, 128)
        self.assertEqual(settings.max_iter, 7)

    def test_bad_environment(self):
        with patch.dict(os.environ, {'HHBVP_DEFAULT_N': 'big'}):
            with self.assertRaises(HhbvpEnvironmentError):
                resolve_settings()

    def test_validation(self):
        cases = [{'grid_n': 8}, {'resolution': 0}, {'tol': 0.0}, {'max_iter': 0}]
        for cli in cases:
            with self.subTest(cli=cli):
                with self.assertRaises(ProblemValidationError) as context:
                    resolve_settings(cli=cli)
                self.assertEqual(context.exception.key, next(iter(cli)))
