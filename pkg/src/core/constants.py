"""
Constants for FilterLab
"""

import math

# Spectral analysis
DEFAULT_GAIN_THRESHOLD = 0.7
DEFAULT_RESPONSE_POINTS = 1024
DEFAULT_SAMPLING_RATE_HZ = 8000.0
CUTOFF_TOLERANCE = 1e-9
SCAN_POINTS = 4096
ZERO_TOLERANCE = 1e-6
NOMINAL_DIVISIONS = 16
MAX_MOVING_AVERAGE_ORDER = 64

# Networks
DEFAULT_LEAKY_ALPHA = 0.01

# Training
DEFAULT_EPSILON = 1e-4
DEFAULT_LEARNING_RATE = 0.5
DEFAULT_MAX_STEPS = 50_000
DEFAULT_RESTARTS = 10
DEFAULT_TRAIN_SIZE = 1000
DEFAULT_TEST_SIZE = 200
DEFAULT_INPUT_RANGE = (0.0, 1.0)

# Seeds
INIT_SEED_OFFSET = 1_000
TEST_SEED_OFFSET = 10_000
RESTART_SEED_STRIDE = 97
NETWORK_SEED_STRIDE = 7

# Suite refinement of converged piecewise-linear networks
REFINE_EPSILON = 1e-6
REFINE_STEPS = 30_000

# Probing
DEFAULT_REGION_GRID_DENSITY = 401
DEFAULT_AUDIT_GRID_DENSITY = 101
BOUNDARY_NUDGE = 1e-6
DEFAULT_PROBE_OFFSET = 0.5
DEFAULT_PROBE_AMPLITUDE = 0.25
DEFAULT_PROBE_LENGTH = 256
EQUIVALENCE_THRESHOLD = 0.02

# File formats
FLOAT_FORMAT = "%.17g"
MANIFEST_FILENAME = "manifest.json"
SUMMARY_FILENAME = "suite_summary.csv"
AUDIT_FILENAME = "suite_audit.csv"

# Suite probe frequencies
PROBE_FREQUENCIES = (math.pi / 8, math.pi / 4, math.pi / 2, 3 * math.pi / 4)
