"""Ideals of large projective dimension: construction, depth-zero certificates, Betti tables."""

from ._pdlab import (
    DomainError,
    FamilyParams,
    Field,
    Ideal,
    OverflowError,
    ParseError,
    ResourceLimitError,
    ValidationError,
    betti,
    build_ideal,
    caviglia_ideal,
    count_A,
    derived_constants,
    enumerate_A,
    mccullough_ideal,
    odd_generator_preset,
    pd_formula,
    run_cli,
    three_generator_preset,
    variable_count,
    verify,
)

__all__ = [
    "DomainError",
    "FamilyParams",
    "Field",
    "Ideal",
    "OverflowError",
    "ParseError",
    "ResourceLimitError",
    "ValidationError",
    "betti",
    "build_ideal",
    "caviglia_ideal",
    "count_A",
    "derived_constants",
    "enumerate_A",
    "mccullough_ideal",
    "odd_generator_preset",
    "pd_formula",
    "run_cli",
    "three_generator_preset",
    "variable_count",
    "verify",
]
