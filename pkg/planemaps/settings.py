"""
Run-time configuration for planemaps.

Values come from the process environment, optionally seeded from a .env
file in the working directory.

Environment variables (set in .env file):
    PLANEMAPS_BUDGET - S-pair budget for one Groebner basis computation
    PLANEMAPS_PRIME - prime used by the prime-field mode
    PLANEMAPS_COEFF_BOUND - coefficient bound for generated maps
    PLANEMAPS_SEED - default run seed
"""
import os
from dataclasses import dataclass

from dotenv import load_dotenv

from planemaps.errors import ConfigError

# Load environment variables from .env file
load_dotenv()

DEFAULT_BUDGET = 200_000
DEFAULT_PRIME = 9223372036854775783  # largest prime below 2^63
DEFAULT_COEFF_BOUND = 10
DEFAULT_SEED = 0

SEED_LIMIT = 2 ** 64


@dataclass(frozen=True)
class Settings:
    budget: int = DEFAULT_BUDGET
    prime: int = DEFAULT_PRIME
    coeff_bound: int = DEFAULT_COEFF_BOUND
    seed: int = DEFAULT_SEED


def _int_env(environ, name: str, default: int, minimum: int) -> int:
    raw = environ.get(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw.strip())
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise ConfigError(f"{name} must be at least {minimum}, got {value}")
    return value


def load_settings(environ=None) -> Settings:
    """Read settings from the environment (os.environ by default)."""
    if environ is None:
        environ = os.environ
    seed = _int_env(environ, 'PLANEMAPS_SEED', DEFAULT_SEED, 0)
    if seed >= SEED_LIMIT:
        raise ConfigError(f"PLANEMAPS_SEED must fit in 64 bits, got {seed}")
    return Settings(
        budget=_int_env(environ, 'PLANEMAPS_BUDGET', DEFAULT_BUDGET, 1),
        prime=_int_env(environ, 'PLANEMAPS_PRIME', DEFAULT_PRIME, 2),
        coeff_bound=_int_env(environ, 'PLANEMAPS_COEFF_BOUND', DEFAULT_COEFF_BOUND, 1),
        seed=seed,
    )


SETTINGS = load_settings()
