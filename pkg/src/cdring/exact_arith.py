"""Exact integer helpers and the 2-row Hermite normal form.

Vectors are pairs ``(x0, x1)`` meaning ``x0 + x1*theta``. A rank-2 lattice
in Z^2 is stored as the column basis ``{(a, 0), (b, c)}`` with ``a, c >= 1``
and ``0 <= b < a``, which is unique for the lattice.
"""

from math import isqrt
from typing import Iterable, NamedTuple, Optional


class Vec2(NamedTuple):
    x0: int
    x1: int


class HnfBasis(NamedTuple):
    a: int
    b: int
    c: int

    def columns(self):
        return [Vec2(self.a, 0), Vec2(self.b, self.c)]

    @property
    def det(self):
        return self.a * self.c


def xgcd(u: int, v: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``g = gcd(u, v) >= 0`` and ``s*u + t*v = g``."""
    old_r, r = u, v
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    if old_r == 0:
        return 0, 0, 0
    return old_r, old_s, old_t


def hnf_2xk(columns: Iterable) -> Optional[HnfBasis]:
    """HNF of the integer span of ``columns``; ``None`` if the rank is < 2.

    Runs a single pass of unimodular column operations: the pivot keeps the
    gcd of the theta-coordinates seen so far, and each eliminated column
    contributes its first coordinate to ``a``.
    """
    columns = list(columns)
    if not columns:
        raise ValueError("hnf_2xk needs at least one column")
    p0, p1 = 0, 0
    a = 0
    for col in columns:
        v0, v1 = col
        if v1 == 0:
            a = xgcd(a, v0)[0]
            continue
        g, s, t = xgcd(p1, v1)
        # [[s, t], [-v1/g, p1/g]] is unimodular and kills the theta-coordinate.
        e0 = (v1 // g) * p0 - (p1 // g) * v0
        p0, p1 = s * p0 + t * v0, g
        a = xgcd(a, e0)[0]
    if a == 0 or p1 == 0:
        return None
    return HnfBasis(a, p0 % a, p1)


def lattice_contains(basis: HnfBasis, vec) -> bool:
    """Whether ``vec`` lies in the lattice spanned by ``basis``."""
    x0, x1 = vec
    a, b, c = basis
    if x1 % c:
        return False
    return (x0 - (x1 // c) * b) % a == 0


def solve_congruence_lattice(alpha: int, beta: int, modulus: int):
    """Basis of ``{(u, v) in Z^2 : alpha*u + beta*v = 0 mod modulus}``.

    Returned as two columns ``(m, v0)`` and ``(0, modulus/g)`` (lower
    triangular in ``(u, v)``), where ``g = gcd(beta, modulus)``.
    """
    if modulus <= 0:
        raise ValueError("modulus must be positive")
    g = xgcd(beta, modulus)[0]
    # alpha*u must vanish mod g before v can be solved for.
    m = g // xgcd(alpha, g)[0]
    step = modulus // g
    if step == 1:
        return [Vec2(m, 0), Vec2(0, 1)]
    inv = pow((beta // g) % step, -1, step)
    v0 = (-(alpha * m // g) * inv) % step
    return [Vec2(m, v0), Vec2(0, step)]


def is_prime_int(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for q in range(3, isqrt(n) + 1, 2):
        if n % q == 0:
            return False
    return True


def factorint(n: int) -> dict[int, int]:
    """Trial-division factorization of ``|n|``; ``{}`` for 0 and +-1."""
    n = abs(n)
    out: dict[int, int] = {}
    if n < 2:
        return out
    q = 2
    while q * q <= n:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def big_omega(n: int) -> int:
    """Number of prime factors of ``n`` counted with multiplicity."""
    return sum(factorint(n).values())


def divisors(n: int) -> list[int]:
    n = abs(n)
    small = [q for q in range(1, isqrt(n) + 1) if n % q == 0]
    return sorted(set(small) | {n // q for q in small})


def is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorint(n).values())


def sqrt_mod(n: int, p: int) -> Optional[int]:
    """A square root of ``n`` modulo the prime ``p``, or ``None`` (Tonelli-Shanks)."""
    n %= p
    if n == 0 or p == 2:
        return n
    if pow(n, (p - 1) // 2, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r
