"""Resource caps and defaults, overridable through the environment."""
import os

from .ring import DEFAULT_PRIME, Field


def max_gens() -> int:
    """Largest generator count for which the Taylor complex is used."""
    return int(os.environ.get("LEXCOH_MAX_GENS", "12"))


def prime() -> int:
    return int(os.environ.get("LEXCOH_PRIME", str(DEFAULT_PRIME)))


def default_field() -> Field:
    return Field(prime())
