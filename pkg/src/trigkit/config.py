import math

DEFAULT_TOLERANCE = 1e-8
DEFAULT_POLE_GUARD = 1e-4  # radians, measured on the offending argument
DEFAULT_SEED = 42
DEFAULT_SAMPLES_PER_N = 100
DEFAULT_ANGLE_INTERVAL = (0.0, 2 * math.pi)

INTEGER_SAMPLE_BOUND = 9  # integer draws come from [-9, 9]
INTEGRALITY_TOLERANCE = 1e-6  # scaled by the product modulus

MIN_BENCH_REPS = 3
TIMER_TICK_FLOOR = 100

PRNG_NAME = "PCG64"
