"""
Utility functions for validation, linear algebra, seeding and formatting.

This module provides helper functions for:
- Input validation (dimensions, tolerances, caps, vectors, point stacks, indices)
- Spectral linear algebra (real spectra, numerical ranks)
- Tolerance-based deduplication of vectors
- Seed derivation and deterministic report rendering
"""

from .errors import DomainError, ParseError

from .input_validation import (
    validate_dimension,
    validate_tolerance,
    validate_cap,
    check_vector,
    check_points,
    check_index,
)

from .linalg import (
    real_spectrum,
    rank_at,
    numerical_rank,
    min_rank_over_spectrum,
)

from .seeding import derive_seeds, spawn_sequences

from .formatting import dumps_report

__all__ = [
    # Errors
    "DomainError",
    "ParseError",
    # Input validation
    "validate_dimension",
    "validate_tolerance",
    "validate_cap",
    "check_vector",
    "check_points",
    "check_index",
    # Spectral analysis
    "real_spectrum",
    "rank_at",
    "numerical_rank",
    "min_rank_over_spectrum",
    # Seeding and output
    "derive_seeds",
    "spawn_sequences",
    "dumps_report",
]
