"""Quadratic orders ``Z + Z*theta`` of conductor ``f`` in ``Q(sqrt(d))``.

``theta = f*omega`` where ``omega`` is ``(1 + sqrt(d))/2`` when ``d = 1 mod 4``
and ``sqrt(d)`` otherwise, so ``theta**2 = T*theta - Nc``.
"""

import re
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidRing, ParseError
from .exact_arith import is_squarefree


@dataclass(frozen=True)
class RingSpec:
    d: int
    f: int
    T: int
    Nc: int
    disc: int

    @property
    def disc_field(self):
        return self.disc // (self.f * self.f)

    @property
    def is_maximal(self):
        return self.f == 1

    def __str__(self):
        return f"d={self.d},f={self.f}"

    def as_dict(self):
        return {"d": self.d, "f": self.f, "T": self.T, "Nc": self.Nc, "disc": self.disc}


class Element(NamedTuple):
    """The ring element ``x + y*theta``."""

    x: int
    y: int

    def __add__(self, other):
        return Element(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Element(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return Element(-self.x, -self.y)

    def scale(self, k: int):
        return Element(k * self.x, k * self.y)

    def __str__(self):
        return format_linear(self.x, self.y)


ONE = Element(1, 0)
ZERO = Element(0, 0)
THETA = Element(0, 1)


def make_ring(d: int, f: int = 1) -> RingSpec:
    if d in (0, 1):
        raise InvalidRing(f"d must not be 0 or 1 (got {d})")
    if not is_squarefree(d):
        raise InvalidRing(f"d={d} is not squarefree")
    if f < 1:
        raise InvalidRing(f"conductor must be >= 1 (got {f})")
    if d % 4 == 1:
        return RingSpec(d, f, T=f, Nc=f * f * (1 - d) // 4, disc=f * f * d)
    return RingSpec(d, f, T=0, Nc=-f * f * d, disc=f * f * 4 * d)


def elem_mul(R: RingSpec, u, v) -> Element:
    ux, uy = u
    vx, vy = v
    yy = uy * vy
    return Element(ux * vx - R.Nc * yy, ux * vy + uy * vx + R.T * yy)


def elem_norm(R: RingSpec, u) -> int:
    x, y = u
    return x * x + R.T * x * y + R.Nc * y * y


def elem_conj(R: RingSpec, u) -> Element:
    # theta' = T - theta
    x, y = u
    return Element(x + R.T * y, -y)


_RING_RE = re.compile(r"^\s*d\s*=\s*([+-]?\d+)\s*,\s*f\s*=\s*([+-]?\d+)\s*$")


def parse_ring_spec(text: str) -> RingSpec:
    """Parse ``d=<int>,f=<int>``, e.g. ``d=-5,f=1``."""
    m = _RING_RE.match(text)
    if m is None:
        raise ParseError(f"ring spec must look like 'd=<int>,f=<int>', got {text!r}", text)
    return make_ring(int(m.group(1)), int(m.group(2)))


def format_linear(x: int, y: int, var: str = "w") -> str:
    """Render ``x + y*w`` compactly: ``2``, ``w``, ``1+w``, ``3-2*w``."""
    if y == 0:
        return str(x)
    if y == 1:
        yt = var
    elif y == -1:
        yt = "-" + var
    else:
        yt = f"{y}*{var}"
    if x == 0:
        return yt
    return f"{x}{yt}" if yt.startswith("-") else f"{x}+{yt}"
