"""Certificates for systems in n variables with X1 as the free variable.

The exact Noether exponent and the exact degree of V(f) are never
computed; the caller supplies upper bounds (or takes them from
:mod:`puiseux_cert.bounds`). A larger bound only makes a certificate harder
to obtain and its prefix shorter, so every bound-based verdict is sound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .bounds import BoundReport, user_bound
from .certificates import NO_CLAIM, SCHEMA, Verdict, exponent_violations, prefix_index
from .parse import poly_parse
from .poly import MultiPoly, as_rational, default_names, format_rational
from .puiseux import (
    InvalidPuiseuxVector,
    OrderValue,
    PuiseuxPoly,
    PuiseuxVector,
    format_order,
    vanishing_order_profile,
)

NONISOLATION = "nonisolation"
CURVE_PREFIX = "curve-prefix"


def _as_bound(value) -> Optional[BoundReport]:
    if value is None or isinstance(value, BoundReport):
        return value
    return user_bound(int(value))


@dataclass(frozen=True)
class SystemQuery:
    system: tuple
    point: tuple
    theta: tuple  # series components, the first must be t
    L: Fraction
    noether_bound: BoundReport
    degree_bound: Optional[BoundReport] = None
    dim1: bool = False
    variables: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "system", tuple(self.system))
        object.__setattr__(self, "point", tuple(as_rational(x) for x in self.point))
        object.__setattr__(self, "theta", tuple(self.theta))
        object.__setattr__(self, "L", as_rational(self.L))
        object.__setattr__(self, "noether_bound", _as_bound(self.noether_bound))
        object.__setattr__(self, "degree_bound", _as_bound(self.degree_bound))
        n = len(self.point)
        names = self.variables or default_names(n)
        object.__setattr__(self, "variables", tuple(names))

    @property
    def n(self) -> int:
        return len(self.point)

    def violations(self) -> list[str]:
        out = []
        n = self.n
        if not self.system:
            out.append("the system is empty")
        for j, f in enumerate(self.system, 1):
            if f.nvars != n:
                out.append(f"f{j} has {f.nvars} variables, the point has {n} coordinates")
            elif f.evaluate(self.point) != 0:
                out.append(f"f{j} does not vanish at xi")
        if len(self.theta) != n:
            out.append(f"Theta has {len(self.theta)} components, expected {n}")
            return out
        try:
            vec = PuiseuxVector(self.theta)
        except InvalidPuiseuxVector as exc:
            out.append(f"invalid Puiseux vector: {exc}")
            return out
        if vec.center != self.point[0]:
            out.append("Theta is not centered at xi_1")
        for l in range(1, n):
            if vec[l].constant_term() != self.point[l]:
                out.append(f"constant term of Theta component {l + 1} differs from xi_{l + 1}")
            out += exponent_violations(vec[l], f"Theta component {l + 1}")
        if self.L < 0:
            out.append("L must be nonnegative")
        return out

    def vector(self) -> PuiseuxVector:
        return PuiseuxVector(self.theta)

    def to_dict(self) -> dict:
        return {
            "variables": list(self.variables),
            "system": [f.to_string(self.variables) for f in self.system],
            "point": [format_rational(x) for x in self.point],
            "theta": [c.to_dict() for c in self.theta],
            "L": format_rational(self.L),
            "noether_bound": self.noether_bound.to_dict(),
            "degree_bound": None if self.degree_bound is None else self.degree_bound.to_dict(),
            "dim1": self.dim1,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SystemQuery":
        names = tuple(data["variables"])
        deg = data.get("degree_bound")
        return cls(
            tuple(poly_parse(s, names) for s in data["system"]),
            tuple(as_rational(x) for x in data["point"]),
            tuple(PuiseuxPoly.from_dict(c) for c in data["theta"]),
            as_rational(data["L"]),
            BoundReport.from_dict(data["noether_bound"]),
            None if deg is None else BoundReport.from_dict(deg),
            bool(data.get("dim1", False)),
            names,
        )


@dataclass
class NonIsolationCertificate:
    verdict: Verdict
    query: SystemQuery
    orders: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    reasons: list = field(default_factory=list)

    kind = NONISOLATION

    @property
    def statement(self) -> str:
        if self.verdict is Verdict.CERTIFIED:
            return "xi lies on an irreducible component of V(f) with free variable X1"
        return NO_CLAIM

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": self.kind,
            "verdict": self.verdict.value,
            "statement": self.statement,
            "query": self.query.to_dict(),
            "orders": [format_order(o) for o in self.orders],
            "noether_bound": self.query.noether_bound.value,
            "L": format_rational(self.query.L),
            "violations": list(self.violations),
            "reasons": list(self.reasons),
        }


@dataclass
class CurvePrefixCertificate:
    verdict: Verdict
    query: SystemQuery
    orders: list = field(default_factory=list)
    ladder: list = field(default_factory=list)
    threshold: Optional[Fraction] = None
    M: Optional[int] = None
    certified_prefix: Optional[PuiseuxVector] = None
    violations: list = field(default_factory=list)
    reasons: list = field(default_factory=list)

    kind = CURVE_PREFIX

    @property
    def statement(self) -> str:
        if self.verdict is Verdict.CERTIFIED:
            return (
                "assuming dim V(f) <= 1: a curve in V(f) through xi with free variable X1 "
                "has a parametrization beginning with Theta_M"
            )
        return NO_CLAIM

    def to_dict(self) -> dict:
        q = self.query
        return {
            "schema": SCHEMA,
            "kind": self.kind,
            "verdict": self.verdict.value,
            "statement": self.statement,
            "query": q.to_dict(),
            "orders": [format_order(o) for o in self.orders],
            "noether_bound": q.noether_bound.value,
            "degree_bound": None if q.degree_bound is None else q.degree_bound.value,
            "dim1_asserted": q.dim1,
            "L": format_rational(q.L),
            "ladder": [format_rational(g) for g in self.ladder],
            "threshold": None if self.threshold is None else format_rational(self.threshold),
            "M": self.M,
            "certified_prefix": None
            if self.certified_prefix is None
            else [c.to_dict() for c in self.certified_prefix],
            "violations": list(self.violations),
            "reasons": list(self.reasons),
        }


def _order_reasons(orders: Sequence[OrderValue], L: Fraction) -> list[str]:
    return [
        f"ord(f{j}(Theta)) = {format_order(o)} is not > L = {format_rational(L)}"
        for j, o in enumerate(orders, 1)
        if not o > L
    ]


def certify_nonisolated(query: SystemQuery) -> NonIsolationCertificate:
    bad = query.violations()
    if bad:
        return NonIsolationCertificate(Verdict.PRECONDITION_VIOLATED, query, violations=bad)
    orders = vanishing_order_profile(query.system, query.vector())
    reasons = _order_reasons(orders, query.L)
    e = query.noether_bound.value
    if query.L < e:
        reasons.append(f"L = {format_rational(query.L)} < Noether exponent bound {e}")
    verdict = Verdict.INCONCLUSIVE if reasons else Verdict.CERTIFIED
    return NonIsolationCertificate(verdict, query, orders, reasons=reasons)


def certify_curve_prefix(query: SystemQuery) -> CurvePrefixCertificate:
    if query.degree_bound is None:
        raise ValueError("the curve-prefix certificate needs a degree bound")
    bad = query.violations()
    if not query.dim1:
        bad.append("dim V(f) <= 1 was not asserted")
    if bad:
        return CurvePrefixCertificate(Verdict.PRECONDITION_VIOLATED, query, violations=bad)
    vec = query.vector()
    orders = vanishing_order_profile(query.system, vec)
    reasons = _order_reasons(orders, query.L)
    product = query.noether_bound.value * query.degree_bound.value
    if query.L < product:
        reasons.append(f"L = {format_rational(query.L)} < e-bound * degree-bound = {product}")
    ladder = vec.ladder()
    threshold = query.L / product
    if reasons:
        return CurvePrefixCertificate(Verdict.INCONCLUSIVE, query, orders, ladder, threshold, reasons=reasons)
    M = prefix_index(ladder, threshold)
    return CurvePrefixCertificate(Verdict.CERTIFIED, query, orders, ladder, threshold, M, vec.truncate(ladder[M]))
