"""Bounded check of the containment-division property.

A ring is containment-division (CDR) when, for all ideals, ``I subset J``
holds exactly when ``I = H*J`` for some ideal ``H``. A bounded search can
only refute this, so a clean run reports ``cdr_up_to_bound``.

The zero ideal is left out of the universe: ``(0) subset J`` and
``(0) = (0)*J`` for every ``J``, and no nonzero ``I`` sits inside ``(0)``.
"""

import json
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import InternalArithmeticBug
from .ideal import Ideal, contains, divide_exact, enumerate_up_to, mul
from .quadratic import RingSpec

CDR_UP_TO_BOUND = "cdr_up_to_bound"
NOT_CDR = "not_cdr"


def default_norm_bound(R: RingSpec) -> int:
    return 30 if R.f == 1 else 50


@dataclass(frozen=True)
class CdrReport:
    ring: RingSpec
    norm_bound: int
    universe_size: int
    pairs_checked: int
    violations: tuple  # (I, J) with I subset J but J not dividing I
    verdict: str
    dedekind_expected: bool

    def as_dict(self):
        return {
            "ring": self.ring.as_dict(),
            "norm_bound": self.norm_bound,
            "universe_size": self.universe_size,
            "pairs_checked": self.pairs_checked,
            "verdict": self.verdict,
            "dedekind_expected": self.dedekind_expected,
            "violations": [
                {"I": list(I.triple), "J": list(J.triple)} for I, J in self.violations
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)


def _violation_key(pair):
    I, J = pair
    return (I.norm, I.a, I.b, J.norm, J.a, J.b)


def check_cdr(R: RingSpec, norm_bound: Optional[int] = None) -> CdrReport:
    if norm_bound is None:
        norm_bound = default_norm_bound(R)
    if norm_bound < 1:
        raise ValueError("norm_bound must be >= 1")
    universe = enumerate_up_to(R, norm_bound)
    violations = []
    pairs = 0
    for I in universe:
        for J in universe:
            pairs += 1
            inside = contains(J, I)
            H = divide_exact(I, J)
            if H is not None:
                if mul(H, J) != I or not inside:
                    raise InternalArithmeticBug(
                        f"divide_exact({I!r}, {J!r}) returned {H!r} but "
                        "H*J != I or I is not contained in J"
                    )
            elif inside:
                violations.append((I, J))
    violations.sort(key=_violation_key)
    return CdrReport(
        ring=R,
        norm_bound=norm_bound,
        universe_size=len(universe),
        pairs_checked=pairs,
        violations=tuple(violations),
        verdict=NOT_CDR if violations else CDR_UP_TO_BOUND,
        dedekind_expected=R.f == 1,
    )


class Classification(NamedTuple):
    dedekind: bool
    cdr_verdict: str
    consistent: bool
    report: CdrReport

    @property
    def note(self) -> str:
        if self.consistent:
            return ""
        return (
            f"no violation up to norm {self.report.norm_bound} in a non-maximal order; "
            "raise the norm bound"
        )


def classify_ring(R: RingSpec, norm_bound: Optional[int] = None) -> Classification:
    """Compare the bounded CDR verdict against ``f == 1`` (maximal, i.e. Dedekind).

    Quadratic orders are Noetherian, so Dedekind and CDR should coincide.
    """
    report = check_cdr(R, norm_bound)
    dedekind = R.f == 1
    consistent = dedekind == (report.verdict == CDR_UP_TO_BOUND)
    return Classification(dedekind, report.verdict, consistent, report)
