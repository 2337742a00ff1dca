"""Exact rational, polynomial and cyclotomic arithmetic."""

from ._backend import BACKEND
from .cyclotomic import (
    CyclotomicNumber,
    IntegralityError,
    OrderMismatchError,
    ZeroFactorError,
    cyc_inverse,
    cyc_mul,
    cyclotomic_polynomial,
    four_sin_sq,
    root_power,
    sine_product,
    to_rational_integer,
    totient,
)

__all__ = [
    "BACKEND",
    "CyclotomicNumber",
    "IntegralityError",
    "OrderMismatchError",
    "ZeroFactorError",
    "cyc_inverse",
    "cyc_mul",
    "cyclotomic_polynomial",
    "four_sin_sq",
    "root_power",
    "sine_product",
    "to_rational_integer",
    "totient",
]
