"""Per-run command configuration."""

from dataclasses import dataclass
from typing import Optional

from config.settings import (
    DEFAULT_JOBS, DEFAULT_LAMBDA_MAX, DEFAULT_SEED, INTERVAL_VERTEX_CAP,
    MODULE_DIM_CAP, NORMALIZE_PATHS,
)
from .errors import LieQuiverError, LieQuiverErrorType
from .lie import LieType


@dataclass
class JobConfig:
    """Validated settings shared by the CLI commands."""
    lie_type: Optional[LieType] = None
    psi_spec: Optional[str] = None
    lambda_max: int = DEFAULT_LAMBDA_MAX
    module_cap: int = MODULE_DIM_CAP
    vertex_cap: int = INTERVAL_VERTEX_CAP
    jobs: int = DEFAULT_JOBS
    seed: int = DEFAULT_SEED
    normalize: bool = NORMALIZE_PATHS
    json_output: bool = False
    output: Optional[str] = None

    def __post_init__(self):
        if self.lambda_max < 0:
            raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, "--lmax must be nonnegative")
        if self.jobs < 1:
            raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, "--jobs must be at least 1")
        if self.module_cap < 1 or self.vertex_cap < 1:
            raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, "Caps must be positive")
