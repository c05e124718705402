"""Decomposition of univariate rational functions over finite fields."""

from .gf import FieldCtx, FieldElement, enumerate_elements, field_arith, make_field
from .ratfunc import (Poly, RatFunc, compose, left_divide, normalize,
                      normalize_at_infinity, unit_inverse)
from .expr import parse_function

__version__ = "0.1.0"

__all__ = [
    "FieldCtx",
    "FieldElement",
    "make_field",
    "field_arith",
    "enumerate_elements",
    "Poly",
    "RatFunc",
    "normalize",
    "compose",
    "unit_inverse",
    "left_divide",
    "normalize_at_infinity",
    "parse_function",
]
