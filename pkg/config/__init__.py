"""
Configuration module for the coorbit embedding toolkit.

This module contains application-wide settings, tolerances, and defaults.
"""

from .settings import (
    RANDOM_SEED,
    SEED_ENV_VAR,
    MIN_DIM,
    GROUP_TOL,
    GRID_PITCH,
    CLOSURE_N_MAX,
    MAX_PROBE_COORDS,
    ORBIT_TOL,
    SAME_ORBIT_TOL,
    RANK_RTOL,
    SPECTRUM_TOL,
    SEPARATION_TOL,
    LIPSCHITZ_SLACK,
    COLLISION_BUDGET,
    COLLISION_STEPS,
    COLLISION_FLOOR,
    COLLISION_MIN_STEP,
    FLOAT_DIGITS,
    CSV_FLOAT_FORMAT,
    EXIT_OK,
    EXIT_DOMAIN,
    EXIT_PARSE,
    EXIT_IO,
    GROUP_TYPES,
    TOOL_VERSION,
    MANIFEST_SCHEMA,
)

__all__ = [
    "RANDOM_SEED",
    "SEED_ENV_VAR",
    "MIN_DIM",
    "GROUP_TOL",
    "GRID_PITCH",
    "CLOSURE_N_MAX",
    "MAX_PROBE_COORDS",
    "ORBIT_TOL",
    "SAME_ORBIT_TOL",
    "RANK_RTOL",
    "SPECTRUM_TOL",
    "SEPARATION_TOL",
    "LIPSCHITZ_SLACK",
    "COLLISION_BUDGET",
    "COLLISION_STEPS",
    "COLLISION_FLOOR",
    "COLLISION_MIN_STEP",
    "FLOAT_DIGITS",
    "CSV_FLOAT_FORMAT",
    "EXIT_OK",
    "EXIT_DOMAIN",
    "EXIT_PARSE",
    "EXIT_IO",
    "GROUP_TYPES",
    "TOOL_VERSION",
    "MANIFEST_SCHEMA",
]
