"""
Constants used throughout the hhbvp application.

This module centralizes numerical defaults and policy thresholds so the
library, the CLI and the tests agree on them.
"""

# Grid and quadrature defaults
DEFAULT_GRID_N = 1024  # Nodes per unit of u = log t; overridable by HHBVP_DEFAULT_N
MIN_GRID_N = 16
MIN_DELTA_NODES = 5  # 4th-order one-sided stencils need five samples
DEFAULT_RESOLUTION = 2048  # Cells for point evaluation of a fractional integral
RECOMMENDED_HILFER_N = 64
RECOMMENDED_VERIFY_N = 256

# Picard iteration
DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 200
DIVERGENCE_GROWTH_STEPS = 3  # Consecutive growing steps before giving up
DIVERGENCE_GROWTH_FACTOR = 10.0  # ...each beyond this multiple of the first step
CONTRACTION_RATIO_SLACK = 0.05
MONOTONE_STEP_SLACK = 1e-12

# Boundary value problem
DEGENERATE_LAMBDA_TOL = 1e-12
ODE_RESIDUAL_EXCLUDED_FRACTION = 8  # Nodes j < N / 8 are skipped by verify_solution
MODE_FIT_NODES = 8

# Certification
LATTICE_X_MIN = -10.0
LATTICE_X_MAX = 10.0
LATTICE_X_STEP = 0.5
LATTICE_SLACK = 1e-12
L_SEARCH_MAX = 1e6
L_SEARCH_TOL = 1e-9
L_SEARCH_SAMPLES = 2401  # Geometric samples on (0, L_SEARCH_MAX] used for bracketing
L_SEARCH_MIN = 1e-12

# Reports
REPORT_SIGNIFICANT_DIGITS = 15
