"""Runtime settings and the error types shared by every module."""

from __future__ import annotations

import contextlib
import dataclasses
from dataclasses import dataclass


class BoundExceeded(ValueError):
    """A computation would exceed one of the configured feasibility bounds."""


class VerificationError(AssertionError):
    """An internal cross-check (criterion vs definition, well-definedness, witness) failed."""


@dataclass
class Settings:
    verify: bool = False
    max_group_order: int = 10_080
    max_profiles: int = 2**24
    max_degree: int = 7
    seed: int = 0
    random_assignments: int = 1024
    max_exhaustive_assignments: int = 2**20


settings = Settings()


@contextlib.contextmanager
def configured(**overrides):
    """Temporarily override fields of the global settings."""
    saved = dataclasses.replace(settings)
    for key, value in overrides.items():
        if not hasattr(settings, key):
            raise AttributeError(f"unknown setting {key!r}")
        setattr(settings, key, value)
    try:
        yield settings
    finally:
        for field in dataclasses.fields(Settings):
            setattr(settings, field.name, getattr(saved, field.name))
