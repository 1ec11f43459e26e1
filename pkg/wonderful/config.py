"""
Configuration constants and settings for the wonderful compactification toolkit.
"""
from dataclasses import dataclass
import os
from dotenv import load_dotenv

from .errors import ConfigurationError

load_dotenv()

# ============================================================================
# ROOT SYSTEMS
# ============================================================================

SUPPORTED_TYPES = ("A", "B2", "G2")
WEYL_RANK_LIMIT = 5  # A_n is enumerated up to n = 5 (|W| = 720)

# Standard Weyl group orders, used to validate the breadth-first closure
WEYL_ORDERS = {"B2": 8, "G2": 12}

# ============================================================================
# SEARCH LIMITS
# ============================================================================

DP_STATE_LIMIT = 5_000_000  # states held at once by the subdivisor DP
EXPAND_LIMIT = 100_000  # default cap on expanded K-class terms
CANDIDATE_WINDOW = 2  # depth of the Steinberg candidate window below the top corner

# ============================================================================
# LOGGING
# ============================================================================

LOG_DIR = "logs"
LOG_FILE = "wonderful.log"
LOG_LEVEL = "INFO"
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'

# ============================================================================
# OUTPUT
# ============================================================================

BANNER_TEXT = "wonderful"
BANNER_FONT = "slant"
JSON_SEPARATORS = (",", ":")


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}")
    if value <= 0:
        raise ConfigurationError(f"{name} must be positive, got {value}")
    return value


@dataclass
class WonderfulConfig:
    """Runtime configuration, overridable through the environment."""

    # Search limits
    dp_state_limit: int = DP_STATE_LIMIT
    expand_limit: int = EXPAND_LIMIT
    weyl_rank_limit: int = WEYL_RANK_LIMIT
    candidate_window: int = CANDIDATE_WINDOW

    # Logging
    log_dir: str = LOG_DIR
    log_level: str = LOG_LEVEL

    @classmethod
    def from_env(cls) -> 'WonderfulConfig':
        """Load configuration from environment variables."""
        level = os.getenv('WF_LOG_LEVEL', LOG_LEVEL).upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ConfigurationError(f"WF_LOG_LEVEL is not a logging level: {level!r}")
        return cls(
            dp_state_limit=_int_env('WF_DP_STATE_LIMIT', DP_STATE_LIMIT),
            expand_limit=_int_env('WF_EXPAND_LIMIT', EXPAND_LIMIT),
            weyl_rank_limit=_int_env('WF_WEYL_RANK_LIMIT', WEYL_RANK_LIMIT),
            candidate_window=_int_env('WF_CANDIDATE_WINDOW', CANDIDATE_WINDOW),
            log_dir=os.getenv('WF_LOG_DIR', LOG_DIR),
            log_level=level,
        )
