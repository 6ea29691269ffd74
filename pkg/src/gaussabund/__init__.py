"""Divisor-power sums and the k-powerful abundancy index over Z[i]."""

from gaussabund.gint import (
    GaussianInt,
    GaussianRational,
    Unit,
    canonicalize,
    divides,
    exact_div,
    gcd,
    parse_gaussian,
)
from gaussabund.errors import CheckpointError, DomainError, InconsistencyError, ResourceError

__version__ = "0.1.0"

__all__ = [
    "GaussianInt",
    "GaussianRational",
    "Unit",
    "canonicalize",
    "divides",
    "exact_div",
    "gcd",
    "parse_gaussian",
    "CheckpointError",
    "DomainError",
    "InconsistencyError",
    "ResourceError",
]
