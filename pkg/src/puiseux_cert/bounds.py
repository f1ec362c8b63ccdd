"""Upper bounds for the Noether exponent e(f) and the degree of V(f).

Every bound comes back as a :class:`BoundReport` carrying the formula used
and its inputs, so that a certificate built on it can be re-derived.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

from .hull import MAX_DIM, DimensionCapError, hull_volume, hull_volume_and_vertices, minkowski_sum
from .poly import MultiPoly

log = logging.getLogger(__name__)

BEZOUT_NOETHER = "bezout-noether"
SPARSE_NOETHER = "sparse-noether"
BEZOUT_DEGREE = "bezout-degree"
SPARSE_DEGREE = "sparse-degree"
MIXEDVOL_DEGREE = "mixedvol-degree"
USER = "user-supplied"

Support = frozenset  # of exponent tuples


@dataclass(frozen=True)
class BoundReport:
    kind: str
    value: int
    inputs: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.value < 1:
            raise ValueError(f"bound value must be >= 1, got {self.value}")

    def to_dict(self) -> dict:
        return {"kind": self.kind, "value": self.value, "inputs": self.inputs}

    @classmethod
    def from_dict(cls, data: dict) -> "BoundReport":
        return cls(data["kind"], int(data["value"]), dict(data.get("inputs", {})))


def user_bound(value: int) -> BoundReport:
    return BoundReport(USER, int(value), {})


def _positive(**kwargs) -> None:
    for name, v in kwargs.items():
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v!r}")


def simplex_vertices(n: int) -> set[tuple]:
    verts = {(0,) * n}
    for i in range(n):
        e = [0] * n
        e[i] = 1
        verts.add(tuple(e))
    return verts


def as_support(points: Iterable[Sequence[int]], n: int | None = None) -> Support:
    pts = frozenset(tuple(int(x) for x in p) for p in points)
    if not pts:
        raise ValueError("a support must be nonempty")
    dims = {len(p) for p in pts}
    if len(dims) != 1 or (n is not None and dims != {n}):
        raise ValueError("support vectors must all have length n")
    if any(x < 0 for p in pts for x in p):
        raise ValueError("support vectors must be nonnegative")
    return pts


def normalized_volume(points: Iterable[Sequence[int]]) -> Fraction:
    """``n! * vol_n(conv(points))``; 0 for lower-dimensional hulls."""
    pts = list(points)
    if not pts:
        raise ValueError("empty support")
    n = len(pts[0])
    return hull_volume(pts) * factorial(n)


def bezout_noether_bound(d: int, n: int, m: int) -> BoundReport:
    _positive(d=d, n=n, m=m)
    return BoundReport(BEZOUT_NOETHER, d ** min(n, m), {"d": d, "n": n, "m": m})


def bezout_degree_bound(d: int, n: int, m: int) -> BoundReport:
    _positive(d=d, n=n, m=m)
    return BoundReport(BEZOUT_DEGREE, d ** min(n, m), {"d": d, "n": n, "m": m})


def _augmented_union(supports: Sequence[Iterable], n: int) -> set[tuple]:
    union = set(simplex_vertices(n))
    for s in supports:
        union.update(as_support(s, n))
    return union


def _support_digest(supports, n) -> list:
    return [sorted(list(p) for p in as_support(s, n)) for s in supports]


def sparse_noether_bound(supports: Sequence[Iterable], n: int) -> BoundReport:
    _positive(n=n)
    vol = normalized_volume(_augmented_union(supports, n))
    value = n ** (n + 2) * math.ceil(vol)
    return BoundReport(
        SPARSE_NOETHER, value, {"n": n, "normalized_volume": str(vol), "supports": _support_digest(supports, n)}
    )


def sparse_degree_bound(supports: Sequence[Iterable], n: int) -> BoundReport:
    _positive(n=n)
    vol = normalized_volume(_augmented_union(supports, n))
    return BoundReport(
        SPARSE_DEGREE, math.ceil(vol), {"n": n, "normalized_volume": str(vol), "supports": _support_digest(supports, n)}
    )


def mixed_volume(polytopes: Sequence[Iterable], n: int) -> int:
    """Mixed volume normalized so that MV(simplex, ..., simplex) = 1.

    Inclusion-exclusion over Minkowski sums of the polytopes, using plain
    Euclidean volumes (that normalization gives MV(P, ..., P) = n! vol(P)).
    """
    _positive(n=n)
    if n > MAX_DIM:
        raise DimensionCapError(f"mixed volume is capped at dimension {MAX_DIM}")
    polys = [as_support(p, n) for p in polytopes]
    if len(polys) != n:
        raise ValueError(f"mixed volume in dimension {n} needs exactly {n} polytopes, got {len(polys)}")
    reduced = [hull_volume_and_vertices(p)[1] for p in polys]
    total = Fraction(0)
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            pts = {(0,) * n}
            for i in subset:
                pts = minkowski_sum(pts, reduced[i])
                pts = set(hull_volume_and_vertices(pts)[1])
            total += (-1) ** (n - size) * hull_volume(pts)
    if total.denominator != 1:
        raise ArithmeticError(f"mixed volume of lattice polytopes came out non-integral: {total}")
    return int(total)


def mixedvol_degree_bound(supports: Sequence[Iterable], n: int) -> BoundReport:
    if len(supports) != n:
        raise ValueError("the mixed-volume degree bound needs a square system (m = n)")
    delta = simplex_vertices(n)
    augmented = [set(as_support(s, n)) | delta for s in supports]
    value = mixed_volume(augmented, n)
    return BoundReport(MIXEDVOL_DEGREE, value, {"n": n, "supports": _support_digest(supports, n)})


@dataclass
class BoundResolution:
    """All applicable bounds of one family and the minimum chosen among them."""

    chosen: BoundReport
    candidates: list[BoundReport]
    warnings: list[str]

    def to_dict(self) -> dict:
        return {
            "chosen": self.chosen.to_dict(),
            "candidates": [c.to_dict() for c in self.candidates],
            "warnings": list(self.warnings),
        }


def _system_shape(system: Sequence[MultiPoly]) -> tuple[int, int, int, list]:
    if not system:
        raise ValueError("empty system")
    n = system[0].nvars
    nonzero = [f for f in system if not f.is_zero()]
    d = max([f.total_degree() for f in nonzero], default=1)
    supports = [f.support() for f in nonzero] or [frozenset({(0,) * n})]
    return max(d, 1), n, len(system), supports


def noether_bounds(system: Sequence[MultiPoly]) -> BoundResolution:
    d, n, m, supports = _system_shape(system)
    cands = [bezout_noether_bound(d, n, m)]
    warnings = []
    if n <= MAX_DIM:
        cands.append(sparse_noether_bound(supports, n))
    else:
        warnings.append(f"n = {n} exceeds the volume cap {MAX_DIM}; sparse bound skipped, Bezout only")
    chosen = min(cands, key=lambda r: r.value)
    log.info("noether bound: %s = %d", chosen.kind, chosen.value)
    return BoundResolution(chosen, cands, warnings)


def degree_bounds(system: Sequence[MultiPoly]) -> BoundResolution:
    d, n, m, supports = _system_shape(system)
    cands = [bezout_degree_bound(d, n, m)]
    warnings = []
    if n <= MAX_DIM:
        cands.append(sparse_degree_bound(supports, n))
        if m == n and len(supports) == n:
            cands.append(mixedvol_degree_bound(supports, n))
    else:
        warnings.append(f"n = {n} exceeds the volume cap {MAX_DIM}; sparse bounds skipped, Bezout only")
    chosen = min(cands, key=lambda r: r.value)
    log.info("degree bound: %s = %d", chosen.kind, chosen.value)
    return BoundResolution(chosen, cands, warnings)
