"""Application configuration settings."""

# Application Settings
APP_NAME = "liequiver"
VERSION = "0.1.0"

# Computation Limits
MODULE_DIM_CAP = 5000  # basis vectors per highest-weight module
INTERVAL_VERTEX_CAP = 100_000  # vertices per materialized interval
ISOMORPHISM_VERTEX_CAP = 60  # vertices per isomorphism test
EXTREMAL_SEARCH_MAX_RANK = 5  # type A exhaustive extremal search
RESOLUTION_LENGTH_CAP = 20  # syzygy steps per projective resolution

# Relations
NORMALIZE_PATHS = True  # relation vectors in normalized path coordinates

# Verification Defaults
DEFAULT_LAMBDA_MAX = 2  # largest weight coordinate on verification grids
DEFAULT_JOBS = 1
DEFAULT_SEED = 0
KOSZUL_EXTRA_DEGREES = 2  # degrees past |Psi| for numerical Koszulity

# Logging
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
LOG_LEVEL = "WARNING"
