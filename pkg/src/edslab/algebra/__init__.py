"""Exact arithmetic: the field tower, dense polynomials, rational functions."""

from .fields import (
    RATIONALS,
    ExtField,
    FieldDescriptor,
    FieldElem,
    PrimeField,
    Rationals,
    field_arith,
)
from .parse import format_poly, format_ratfunc, parse_poly
from .poly import (
    NEG_INF,
    Poly,
    enumerate_irreducibles,
    irreducible_count,
    poly_arith,
    poly_constant,
    poly_from_coeffs,
    poly_gcd,
    poly_gen,
    poly_is_irreducible,
    poly_is_squarefree,
    poly_pow_mod,
    poly_sqrt,
)
from .ratfunc import FunctionField, RatFunc, ratfunc_make

__all__ = [
    "RATIONALS",
    "ExtField",
    "FieldDescriptor",
    "FieldElem",
    "PrimeField",
    "Rationals",
    "field_arith",
    "format_poly",
    "format_ratfunc",
    "parse_poly",
    "NEG_INF",
    "Poly",
    "enumerate_irreducibles",
    "irreducible_count",
    "poly_arith",
    "poly_constant",
    "poly_from_coeffs",
    "poly_gcd",
    "poly_gen",
    "poly_is_irreducible",
    "poly_is_squarefree",
    "poly_pow_mod",
    "poly_sqrt",
    "FunctionField",
    "RatFunc",
    "ratfunc_make",
]
