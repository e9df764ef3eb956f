"""Numerical tolerances and geometric constants, centralized in one table.

Every tolerance used for validation, classification, or property checking
lives here so there is a single tuning point.
"""

import math

# Tolerance on belief + disbelief + uncertainty = 1 at construction.
EPS_SUM = 1e-9

# Tolerance for classifying an opinion as a vertex / dogmatic case.
EPS_CLASSIFY = 1e-12

# Slack allowed when testing whether a Cartesian point lies in the triangle.
EPS_GEO = 1e-9

# Default tolerance of the requirement auditor.
AUDIT_TOL = 1e-9

# Default seed of the requirement auditor (overridable via SL_TRUST_SEED).
DEFAULT_SEED = 42

# Fixed relative atomicity: every operation in this library assumes 1/2.
DEFAULT_BASE_RATE = 0.5

# Frames above this size make exact powerset reasoning pointlessly slow.
MAX_FRAME_ATOMS = 16

# Triangle geometry: vertices B=(0,0), D=(2/sqrt3,0), U=(1/sqrt3,1) after
# scaling so each altitude has length 1.
SQRT3 = math.sqrt(3.0)
SIN_60 = SQRT3 / 2.0
COS_60 = 0.5
PI_OVER_3 = math.pi / 3.0
TWO_PI_OVER_3 = 2.0 * math.pi / 3.0
HALF_PI = math.pi / 2.0
SIDE = 2.0 / SQRT3
