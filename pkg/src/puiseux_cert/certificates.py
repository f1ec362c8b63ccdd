"""Shared certificate vocabulary: verdicts, exponent ladders, prefix indices."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Sequence

from .puiseux import PuiseuxPoly

SCHEMA = "1"


class Verdict(str, Enum):
    CERTIFIED = "certified"
    INCONCLUSIVE = "inconclusive"
    PRECONDITION_VIOLATED = "precondition-violated"

    def __str__(self) -> str:
        return self.value


EXIT_CODES = {
    Verdict.CERTIFIED: 0,
    Verdict.INCONCLUSIVE: 10,
    Verdict.PRECONDITION_VIOLATED: 2,
}

NO_CLAIM = "no conclusion: the sufficient conditions are not met (this is not a proof of isolation)"


class PreconditionError(ValueError):
    pass


def series_ladder(theta: PuiseuxPoly) -> list[Fraction]:
    """``[0, g_1, ..., g_N]``: exponent 0 always comes first, even if its coefficient is 0."""
    return sorted({Fraction(0), *theta.exponents()})


def prefix_index(ladder: Sequence[Fraction], threshold: Fraction) -> int:
    """Largest ``i`` with ``ladder[i] <= threshold``; the ladder must start at 0 <= threshold."""
    if not ladder or ladder[0] > threshold:
        raise ValueError("no exponent of the ladder is within the threshold")
    best = 0
    for i, g in enumerate(ladder):
        if g <= threshold:
            best = i
    return best


def exponent_violations(theta: PuiseuxPoly, label: str) -> list[str]:
    bad = [e for e in theta.exponents() if e < 0]
    if bad:
        return [f"{label} has negative exponents {[str(e) for e in bad]}"]
    return []
