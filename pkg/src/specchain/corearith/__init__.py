"""Exact fields, sparse polynomials, monomial orders and the polynomial parser."""

from .fields import (
    QQ,
    ExtensionField,
    Field,
    FieldElement,
    PrimeField,
    RationalFunctionField,
    Rationals,
    field_arith,
    field_inverse,
)
from .parse import parse_polynomial
from .poly import GREVLEX, LEX, MonomialOrder, PolyRing, Polynomial, partial_derivative, poly_arith

__all__ = [
    "QQ",
    "Field",
    "Rationals",
    "PrimeField",
    "RationalFunctionField",
    "ExtensionField",
    "FieldElement",
    "field_arith",
    "field_inverse",
    "MonomialOrder",
    "LEX",
    "GREVLEX",
    "PolyRing",
    "Polynomial",
    "poly_arith",
    "partial_derivative",
    "parse_polynomial",
]
