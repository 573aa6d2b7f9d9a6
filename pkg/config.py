"""
Configuration settings for the Hilbert-square maximality toolkit.
"""

from pathlib import Path
from typing import Dict, Union

from dotenv import dotenv_values

from errors import ConfigurationError

# Homology engine
HOMOLOGY_CONFIG = {
    "max_simplices": 5_000_000,  # total simplices of any constructed complex
    "max_dimension": 4,
    "auto_subdivide": True,  # subdivide non-regular involutions instead of failing
}

# Generating-function oracle
GOETTSCHE_CONFIG = {
    "max_coefficients": 2_000_000,
    "default_n_max": 2,
}

# Oracle suites run by `verify`
VERIFY_CONFIG = {
    "identity_grid_r": 20,
    "identity_grid_beta2": 200,
    "cx_grid_b1": 8,
    "cx_grid_b2": 30,
    "euler_n_max": 6,
    # (orientable, genus_or_crosscaps): S2, T2, RP2, Klein bottle
    "symmetric_square_surfaces": [(True, 0), (True, 1), (False, 1), (False, 2)],
}

# Output Configuration
OUTPUT_CONFIG = {
    "table_format": "grid",
    "profile_suffix": ".profile",
}


def _as_int(key: str, raw: str) -> int:
    try:
        value = int(raw.replace("_", ""))
    except ValueError:
        raise ConfigurationError(f"{key}: expected an integer, got {raw!r}") from None
    if value <= 0:
        raise ConfigurationError(f"{key}: must be positive, got {value}")
    return value


def _as_bool(key: str, raw: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ConfigurationError(f"{key}: expected a boolean, got {raw!r}")


# settings-file key -> (target dict, entry, parser)
_OVERRIDES = {
    "HOMOLOGY_MAX_SIMPLICES": (HOMOLOGY_CONFIG, "max_simplices", _as_int),
    "HOMOLOGY_AUTO_SUBDIVIDE": (HOMOLOGY_CONFIG, "auto_subdivide", _as_bool),
    "GOETTSCHE_MAX_COEFFICIENTS": (GOETTSCHE_CONFIG, "max_coefficients", _as_int),
    "OUTPUT_TABLE_FORMAT": (OUTPUT_CONFIG, "table_format", lambda key, raw: raw.strip()),
}


def load_overrides(path: Union[str, Path]) -> Dict[str, object]:
    """
    Read a KEY=VALUE settings file and return the parsed overrides.

    The file is parsed with python-dotenv but never exported to the
    process environment.

    Args:
        path: Settings file to read
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigurationError(f"settings file not found: {path}")

    parsed = {}
    for key, raw in dotenv_values(path).items():
        if key not in _OVERRIDES:
            raise ConfigurationError(f"unknown setting {key!r} in {path}")
        if raw is None:
            raise ConfigurationError(f"{key}: missing value in {path}")
        _, _, parser = _OVERRIDES[key]
        parsed[key] = parser(key, raw)
    return parsed


def apply_overrides(path: Union[str, Path]) -> Dict[str, object]:
    """Load a settings file and update the configuration dictionaries in place."""
    overrides = load_overrides(path)
    for key, value in overrides.items():
        target, entry, _ = _OVERRIDES[key]
        target[entry] = value
    return overrides
