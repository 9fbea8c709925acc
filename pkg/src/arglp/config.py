"""Enumeration limits, overridable from the environment."""

import os

DEFAULT_LIMIT_ATOMS = 14
DEFAULT_LIMIT_ELEMENTS = 16


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def limit_atoms() -> int:
    return _env_int("ARGLP_LIMIT_ATOMS", DEFAULT_LIMIT_ATOMS)


def limit_elements() -> int:
    return _env_int("ARGLP_LIMIT_ELEMENTS", DEFAULT_LIMIT_ELEMENTS)
