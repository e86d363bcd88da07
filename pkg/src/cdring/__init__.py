"""Exact ideal arithmetic in quadratic orders and a bounded checker for the
containment-division property (``I`` inside ``J`` iff ``J`` divides ``I``)."""

from .cdr_check import CdrReport, check_cdr, classify_ring
from .errors import CdrError
from .factor import DivisorChain, SplitResult, check_dicc_chain, factor_ideal, split_rational_prime
from .ideal import (
    Ideal,
    IdealSet,
    colon,
    contains,
    divide_exact,
    enumerate_of_norm,
    from_generators,
    is_prime,
    mul,
    principal,
    unit_ideal,
    validate_hnf,
)
from .oracle import brute_divide, count_ideals
from .quadratic import Element, RingSpec, elem_mul, elem_norm, make_ring

__all__ = [
    "CdrError", "CdrReport", "DivisorChain", "Element", "Ideal", "IdealSet", "RingSpec",
    "SplitResult", "brute_divide", "check_cdr", "check_dicc_chain", "classify_ring", "colon",
    "contains", "count_ideals", "divide_exact", "elem_mul", "elem_norm", "enumerate_of_norm",
    "factor_ideal", "from_generators", "is_prime", "make_ring", "mul", "principal",
    "split_rational_prime", "unit_ideal", "validate_hnf",
]
