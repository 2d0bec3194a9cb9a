"""
Configuration for computation limits.
Loads settings from environment variables with sensible defaults.
"""

import logging
import os
from dataclasses import dataclass, field

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

logger = logging.getLogger(__name__)

DEFAULT_MAX_DIM = 20_000


def _max_dim_from_env() -> int:
    raw = os.getenv("HOOKSCHUR_MAX_DIM", "")
    if not raw:
        return DEFAULT_MAX_DIM
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value <= 0:
        logger.warning(
            "Ignoring HOOKSCHUR_MAX_DIM=%r, using default %d", raw, DEFAULT_MAX_DIM
        )
        return DEFAULT_MAX_DIM
    return value


@dataclass(frozen=True)
class LimitsConfig:
    """Desk-scale bounds enforced before any computation starts."""

    # Largest ambient tensor space (and dense matrix side) we materialize
    max_dim: int = field(default_factory=_max_dim_from_env)

    max_m: int = 12
    max_n: int = 6

    # Seed for randomized equivariance trials; recorded in every report
    default_seed: int = 20240


def get_limits() -> LimitsConfig:
    """Read the limits fresh from the environment."""
    return LimitsConfig()
