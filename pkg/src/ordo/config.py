import os
from dataclasses import dataclass
from dotenv import load_dotenv


# --- ALPHABET CONSTANTS ---
ANNIHILATOR_SYMBOL = "a"
CREATOR_SYMBOL = "A"
CREATOR_ALIASES = ("a†", "ad")


# --- DEFAULT LIMITS ---
DEFAULT_REWRITE_LIMIT = 20
DEFAULT_BRUTE_FORCE_LIMIT = 30
DEFAULT_EXPONENT_LIMIT = 10**6


# --- EXIT CODES ---
EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class Config:
    """Configuration for the ordo engine and its command-line stages.

    Library functions take their limits as explicit arguments; a Config is
    only built at the command boundary and passed down, so tests can run
    several differently-limited configurations side by side.
    """

    # --- ORACLE LIMITS ---
    rewrite_limit: int = DEFAULT_REWRITE_LIMIT
    brute_force_limit: int = DEFAULT_BRUTE_FORCE_LIMIT

    # --- PARSER LIMITS ---
    exponent_limit: int = DEFAULT_EXPONENT_LIMIT

    # --- BENCH SETTINGS ---
    bench_seed: int = 0
    bench_workers: int = 0

    def __post_init__(self):
        for name in (
            "rewrite_limit",
            "brute_force_limit",
            "exponent_limit",
            "bench_seed",
            "bench_workers",
        ):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative, got {getattr(self, name)}")


def _read_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.strip())
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")
    return value


def load_config_from_env() -> Config:
    """Load configuration from environment variables with defaults.

    Returns:
        Config: Configuration instance populated from environment variables.

    Raises:
        ValueError: If a variable is set to something other than a
            nonnegative integer.
    """
    # Load environment variables from .env file if it exists
    load_dotenv()

    return Config(
        rewrite_limit=_read_int("ORDO_REWRITE_LIMIT", DEFAULT_REWRITE_LIMIT),
        brute_force_limit=_read_int("ORDO_BRUTE_FORCE_LIMIT", DEFAULT_BRUTE_FORCE_LIMIT),
        exponent_limit=_read_int("ORDO_EXPONENT_LIMIT", DEFAULT_EXPONENT_LIMIT),
        bench_seed=_read_int("ORDO_BENCH_SEED", 0),
        bench_workers=_read_int("ORDO_BENCH_WORKERS", 0),
    )
