"""Two-parameter twisted Ringel-Hall algebras of linear quivers.

The package computes Hall polynomials by point counting, multiplies in the
twisted Hall algebra, and builds the PBW, monomial and canonical bases together
with the Hopf structure of the extended algebra.
"""

from __future__ import annotations

from .coeffs import IntPolynomial, LaurentPolynomial, RationalFunction, parse_coefficient
from .errors import (
    ArgumentError,
    InterpolationError,
    PoleError,
    ResourceLimitError,
    RshallError,
    VerificationError,
)
from .hall import ONE_PARAM, STANDARD, SWAPPED, HallElement, hall_polynomial, multiply
from .parsing import parse_element
from .repcat import BUDGET, DimVector, Multisegment, Segment, euler_form, set_budget

__all__ = [
    "ArgumentError",
    "BUDGET",
    "DimVector",
    "HallElement",
    "IntPolynomial",
    "InterpolationError",
    "LaurentPolynomial",
    "Multisegment",
    "ONE_PARAM",
    "PoleError",
    "RationalFunction",
    "ResourceLimitError",
    "RshallError",
    "STANDARD",
    "SWAPPED",
    "Segment",
    "VerificationError",
    "euler_form",
    "hall_polynomial",
    "multiply",
    "parse_coefficient",
    "parse_element",
    "set_budget",
]

__version__ = "0.1.0"
