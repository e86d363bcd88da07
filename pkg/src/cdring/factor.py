"""Prime splitting and divisor-chain factorization of ideals."""

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    ChainExceeded,
    ConductorPrime,
    NoContainingPrime,
    NotDivisible,
    NotPrime,
    RingMismatch,
)
from .exact_arith import factorint, is_prime_int, sqrt_mod
from .ideal import (
    Ideal,
    IdealSet,
    contains,
    divide_exact,
    enumerate_of_norm,
    is_prime,
    mul,
    unit_ideal,
)
from .quadratic import RingSpec

SPLIT = "split"
INERT = "inert"
RAMIFIED = "ramified"


@dataclass(frozen=True)
class SplitResult:
    p: int
    kind: str
    primes: tuple

    def product(self) -> Ideal:
        """Product of the primes above ``p`` with multiplicity, i.e. ``(p)``."""
        ps = list(self.primes) * (2 if self.kind == RAMIFIED else 1)
        out = ps[0]
        for P in ps[1:]:
            out = mul(out, P)
        return out


@dataclass(frozen=True)
class DivisorChain:
    start: Ideal
    steps: tuple = ()  # (prime, quotient) pairs
    stationary: bool = False

    @property
    def primes(self) -> list[Ideal]:
        return [P for P, _ in self.steps]

    @property
    def ideals(self) -> list[Ideal]:
        """``[I_0, I_1, ..., I_m]``: the start followed by every quotient."""
        return [self.start] + [Q for _, Q in self.steps]

    def __len__(self):
        return len(self.steps)


def _poly_roots_mod(R: RingSpec, p: int) -> list[int]:
    # roots of x^2 - T x + Nc mod p
    T, Nc = R.T % p, R.Nc % p
    if p == 2:
        return [r for r in range(2) if (r * r - T * r + Nc) % 2 == 0]
    disc = (T * T - 4 * Nc) % p
    s = sqrt_mod(disc, p)
    if s is None:
        return []
    inv2 = pow(2, -1, p)
    return sorted({(T + s) * inv2 % p, (T - s) * inv2 % p})


def split_rational_prime(R: RingSpec, p: int) -> SplitResult:
    """How ``(p)`` factors, for a prime ``p`` not dividing the conductor.

    Uses Kummer-Dedekind on ``x^2 - T*x + Nc``: each root ``r`` mod ``p``
    gives the prime ``(p, theta - r)``.
    """
    if not is_prime_int(p):
        raise NotPrime(f"{p} is not a rational prime")
    if R.f % p == 0:
        raise ConductorPrime(
            f"p={p} divides the conductor f={R.f}; primes above it must be enumerated"
        )
    roots = _poly_roots_mod(R, p)
    if not roots:
        return SplitResult(p, INERT, (Ideal(R, p, 0, p),))
    primes = sorted((Ideal(R, p, (-r) % p, 1) for r in roots), key=lambda I: I.sort_key)
    if len(primes) == 1:
        return SplitResult(p, RAMIFIED, tuple(primes))
    return SplitResult(p, SPLIT, tuple(primes))


def primes_above(R: RingSpec, p: int) -> IdealSet:
    """All prime ideals containing the rational prime ``p``, in canonical order."""
    if R.f % p:
        return IdealSet(R, split_rational_prime(R, p).primes)
    cands = enumerate_of_norm(R, p) | enumerate_of_norm(R, p * p)
    return IdealSet(R, [P for P in cands if is_prime(P)])


def default_max_steps(I: Ideal) -> int:
    return I.norm.bit_length()  # floor(log2 n) + 1


def factor_ideal(I: Ideal, max_steps: Optional[int] = None):
    """Peel off prime factors one at a time: ``I_k = I_{k+1} * P_{k+1}``.

    At each step the smallest rational prime ``p`` dividing ``norm(I_k)`` is
    taken, and among primes above ``p`` containing ``I_k`` the first in
    ``(norm, a, b)`` order. Returns ``(factors, chain)``; raises
    ``NotDivisible``, ``NoContainingPrime`` or ``ChainExceeded`` when the
    procedure breaks down, with the partial chain attached.
    """
    if max_steps is None:
        max_steps = default_max_steps(I)
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    R = I.ring
    steps = []
    cur = I
    while not cur.is_unit():
        partial = DivisorChain(I, tuple(steps))
        if len(steps) >= max_steps:
            raise ChainExceeded(
                f"no factorization of {I} within {max_steps} steps", chain=partial
            )
        p = min(factorint(cur.norm))
        containing = [P for P in primes_above(R, p) if contains(P, cur)]
        if not containing:
            raise NoContainingPrime(
                f"no prime above {p} contains {cur}", chain=partial
            )
        P = containing[0]
        Q = divide_exact(cur, P)
        if Q is None:
            raise NotDivisible(
                f"{cur} is contained in the prime {P} but is not divisible by it"
                " (containment-division fails)",
                dividend=cur,
                divisor=P,
                chain=partial,
            )
        steps.append((P, Q))
        cur = Q
    chain = DivisorChain(I, tuple(steps), stationary=True)
    return [P for P, _ in steps], chain


def check_dicc_chain(chain: Sequence[Ideal]):
    """Return ``(is_divisor_chain, stationary_at)`` for a finite chain.

    ``stationary_at`` is the first index from which every entry is equal, or
    ``None`` if the last two entries still differ.
    """
    chain = list(chain)
    if not chain:
        raise ValueError("chain must be nonempty")
    R = chain[0].ring
    for I in chain[1:]:
        if I.ring != R:
            raise RingMismatch(f"chain mixes rings {R} and {I.ring}")
    is_div = all(
        divide_exact(chain[j], chain[j + 1]) is not None for j in range(len(chain) - 1)
    )
    if len(chain) >= 2 and chain[-1] != chain[-2]:
        return is_div, None
    m = len(chain) - 1
    while m > 0 and chain[m - 1] == chain[-1]:
        m -= 1
    return is_div, m


def reconstruct(factors: Sequence[Ideal], R: RingSpec) -> Ideal:
    out = unit_ideal(R)
    for P in factors:
        out = mul(out, P)
    return out
