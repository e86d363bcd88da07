"""Nonzero integral ideals of a quadratic order, in canonical HNF.

An ideal is the lattice ``Z*a + Z*(b + c*theta)`` with ``a, c >= 1``,
``0 <= b < a``, ``c | a``, ``c | b`` and ``a*c | b**2 + T*b*c + Nc*c**2``.
The HNF is unique, so ideal equality is triple equality.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import InvalidIdeal, RingMismatch
from .exact_arith import (
    HnfBasis,
    divisors,
    factorint,
    hnf_2xk,
    lattice_contains,
    solve_congruence_lattice,
)
from .quadratic import THETA, Element, RingSpec, elem_mul, format_linear


@dataclass(frozen=True)
class Ideal:
    ring: RingSpec
    a: int
    b: int
    c: int

    @property
    def norm(self) -> int:
        return self.a * self.c

    @property
    def hnf(self) -> HnfBasis:
        return HnfBasis(self.a, self.b, self.c)

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def sort_key(self):
        return (self.norm, self.a, self.b)

    def basis(self) -> list[Element]:
        return [Element(self.a, 0), Element(self.b, self.c)]

    def is_unit(self) -> bool:
        return self.a == 1 and self.c == 1

    def __mul__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return mul(self, other)

    def __str__(self):
        return f"[{self.a}, {format_linear(self.b, self.c)}]"

    def __repr__(self):
        return f"Ideal({self.ring}; a={self.a}, b={self.b}, c={self.c})"


class IdealSet:
    """Finite set of ideals of one ring, kept sorted by ``(norm, a, b)``."""

    def __init__(self, ring: RingSpec, members: Iterable[Ideal] = ()):
        self.ring = ring
        uniq = {}
        for I in members:
            _same_ring(ring, I.ring)
            uniq[I.triple] = I
        self.members = tuple(sorted(uniq.values(), key=lambda I: I.sort_key))

    def __iter__(self) -> Iterator[Ideal]:
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def __contains__(self, I):
        return I in self.members

    def __or__(self, other):
        return IdealSet(self.ring, self.members + tuple(other))

    def __repr__(self):
        return f"IdealSet({self.ring}, {[I.triple for I in self.members]})"


def _same_ring(R, S):
    if R != S:
        raise RingMismatch(f"ideals live in different rings: {R} vs {S}")


def validate_hnf(R: RingSpec, a: int, b: int, c: int) -> Ideal:
    if a < 1:
        raise InvalidIdeal(f"a must be >= 1 (got {a})")
    if c < 1:
        raise InvalidIdeal(f"c must be >= 1 (got {c})")
    if not 0 <= b < a:
        raise InvalidIdeal(f"b must satisfy 0 <= b < a (got b={b}, a={a})")
    if a % c:
        raise InvalidIdeal(f"c must divide a (got a={a}, c={c})")
    if b % c:
        raise InvalidIdeal(f"c must divide b (got b={b}, c={c})")
    if (b * b + R.T * b * c + R.Nc * c * c) % (a * c):
        raise InvalidIdeal(
            f"lattice ({a}, {b}, {c}) is not closed under multiplication by theta"
        )
    return Ideal(R, a, b, c)


def _from_basis(R: RingSpec, h: HnfBasis) -> Ideal:
    return Ideal(R, h.a, h.b, h.c)


def from_generators(R: RingSpec, gens: Iterable) -> Optional[Ideal]:
    """Smallest ideal containing ``gens``; ``None`` when every generator is 0."""
    gens = [Element(*g) for g in gens]
    if not gens:
        raise ValueError("from_generators needs at least one generator")
    cols = []
    for g in gens:
        cols.append(g)
        cols.append(elem_mul(R, g, THETA))
    h = hnf_2xk(cols)
    return None if h is None else _from_basis(R, h)


def unit_ideal(R: RingSpec) -> Ideal:
    return Ideal(R, 1, 0, 1)


def principal(R: RingSpec, g) -> Optional[Ideal]:
    return from_generators(R, [g])


def norm(I: Ideal) -> int:
    return I.a * I.c


def contains_element(I: Ideal, x) -> bool:
    return lattice_contains(I.hnf, x)


def contains(J: Ideal, I: Ideal) -> bool:
    """Is ``I`` a subset of ``J``?"""
    _same_ring(J.ring, I.ring)
    if I.a % J.a or I.c % J.c:
        return False
    return (I.b - (I.c // J.c) * J.b) % J.a == 0


def mul(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I.ring, J.ring)
    R = I.ring
    prods = [elem_mul(R, u, v) for u in I.basis() for v in J.basis()]
    return _from_basis(R, hnf_2xk(prods))


def colon(I: Ideal, J: Ideal) -> Ideal:
    """``(I : J) = {x in R : x*J subset of I}``, an integral ideal containing ``I``.

    For ``x = u + v*theta`` and each basis vector ``e`` of ``J``, the product
    ``x*e = u*e + v*(theta*e)`` lies in ``I`` iff two linear congruences
    mod ``norm(I)`` hold. The solution lattice is refined one congruence at a
    time by reparametrizing ``(u, v) = P @ k``.
    """
    _same_ring(I.ring, J.ring)
    R = I.ring
    a, b, c = I.a, I.b, I.c
    n = a * c
    # Columns of P span the current candidate lattice of (u, v).
    P = [(1, 0), (0, 1)]
    for e in J.basis():
        te = elem_mul(R, THETA, e)
        # (y0, y1) in I  iff  c*y0 - b*y1 = 0 (mod n)  and  a*y1 = 0 (mod n)
        rows = [
            (c * e.x - b * e.y, c * te.x - b * te.y),
            (a * e.y, a * te.y),
        ]
        for alpha, beta in rows:
            # condition on k where (u, v) = P @ k
            ak = alpha * P[0][0] + beta * P[0][1]
            bk = alpha * P[1][0] + beta * P[1][1]
            s1, s2 = solve_congruence_lattice(ak, bk, n)
            P = [
                (P[0][0] * s1[0] + P[1][0] * s1[1], P[0][1] * s1[0] + P[1][1] * s1[1]),
                (P[0][0] * s2[0] + P[1][0] * s2[1], P[0][1] * s2[0] + P[1][1] * s2[1]),
            ]
    return _from_basis(R, hnf_2xk(P))


def divide_exact(I: Ideal, J: Ideal) -> Optional[Ideal]:
    """An ideal ``H`` with ``H*J == I`` if one exists, else ``None``.

    Any witness ``H`` satisfies ``H subset (I : J)``, so
    ``I = H*J subset (I : J)*J subset I``: the colon ideal is a witness
    whenever one exists.
    """
    H = colon(I, J)
    return H if mul(H, J) == I else None


def enumerate_of_norm(R: RingSpec, n: int) -> IdealSet:
    if n < 1:
        raise ValueError("norm must be >= 1")
    found = []
    for c in divisors(n):
        a, rem = divmod(n, c)
        if rem or a % c:
            continue
        for b in range(0, a, c):
            if (b * b + R.T * b * c + R.Nc * c * c) % n == 0:
                found.append(Ideal(R, a, b, c))
    return IdealSet(R, found)


def enumerate_up_to(R: RingSpec, bound: int) -> IdealSet:
    out = []
    for n in range(1, bound + 1):
        out.extend(enumerate_of_norm(R, n))
    return IdealSet(R, out)


def is_prime(P: Ideal) -> bool:
    """Whether ``P`` is a maximal (equivalently nonzero prime) ideal.

    ``R/P`` is finite, so prime means maximal. ``J`` containing ``P`` forces
    ``norm(J) | norm(P)``; an intermediate ideal of ``R/P`` of order ``p**2``
    would have norm ``p``.
    """
    n = P.norm
    fac = factorint(n)
    if len(fac) != 1 or sum(fac.values()) > 2:
        return False
    for m in divisors(n):
        if m == 1 or m == n:
            continue
        for J in enumerate_of_norm(P.ring, m):
            if contains(J, P):
                return False
    return True
