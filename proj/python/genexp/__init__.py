"""Generalized exponents of first-layer weights in type A.

Weights are lists of integers summing to zero.  Polynomials come back as
{exponent: coefficient} dicts.
"""

from ._genexp import (
    InputError,
    VerificationError,
    canonical_expression,
    exponents,
    fourier,
    full_report,
    height,
    height_set,
    height_set_inverse,
    methods,
    shape,
    solve_system,
    syt,
    verify,
    weight_from_partition,
)

__all__ = [
    "InputError",
    "VerificationError",
    "canonical_expression",
    "exponents",
    "fourier",
    "full_report",
    "height",
    "height_set",
    "height_set_inverse",
    "methods",
    "shape",
    "solve_system",
    "syt",
    "verify",
    "weight_from_partition",
]
