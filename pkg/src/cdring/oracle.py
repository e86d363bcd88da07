"""Brute-force reference implementations for cross-checking the fast paths."""

from typing import Optional

from .errors import RingMismatch
from .ideal import Ideal, enumerate_of_norm, enumerate_up_to, mul
from .quadratic import RingSpec


def brute_divide(I: Ideal, J: Ideal, search_norm_cap: Optional[int] = None) -> Optional[Ideal]:
    """First ideal ``H`` in ``(norm, a, b)`` order with ``H*J == I``.

    Searching up to ``norm(I)`` is enough: a witness contains ``I``.
    """
    if I.ring != J.ring:
        raise RingMismatch(f"ideals live in different rings: {I.ring} vs {J.ring}")
    if search_norm_cap is None:
        search_norm_cap = I.norm
    if search_norm_cap < I.norm:
        raise ValueError(f"search_norm_cap must be >= norm(I) = {I.norm}")
    for H in enumerate_up_to(I.ring, search_norm_cap):
        if mul(H, J) == I:
            return H
    return None


def count_ideals(R: RingSpec, n_max: int) -> list[int]:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return [len(enumerate_of_norm(R, n)) for n in range(1, n_max + 1)]
