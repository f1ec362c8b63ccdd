"""Certificates for plane curves: one polynomial q(t, Y), or a pair f1, f2.

``lemma_prefix_certificate`` decides how much of a truncated series theta
is the beginning of a branch of V(q). ``proposition_common_curve`` decides
whether f1 and f2 share a curve through the point, and how much of theta
parametrizes it. Neither ever concludes that the point is isolated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Optional

from .certificates import (
    NO_CLAIM,
    SCHEMA,
    PreconditionError,
    Verdict,
    exponent_violations,
    prefix_index,
    series_ladder,
)
from .newton import SingularPointError, regular_lift
from .parse import poly_parse
from .poly import MultiPoly, UniPoly, as_rational, default_names, format_rational, root_multiplicity
from .puiseux import OrderValue, PuiseuxPoly, format_order, substitution_order
from .resultant import y_coefficients

LEMMA = "lemma-prefix"
COMMON_CURVE = "common-curve"


@dataclass(frozen=True)
class BivariateQuery:
    polys: tuple  # (q,) or (f1, f2)
    point: tuple
    theta: PuiseuxPoly  # the X2-component, constant term xi_2
    L: Fraction
    variables: tuple = ("x1", "x2")

    def __post_init__(self):
        object.__setattr__(self, "polys", tuple(self.polys))
        object.__setattr__(self, "point", tuple(as_rational(x) for x in self.point))
        object.__setattr__(self, "L", as_rational(self.L))
        object.__setattr__(self, "variables", tuple(self.variables))

    def violations(self, expected: int) -> list[str]:
        out = []
        if len(self.polys) != expected:
            out.append(f"expected {expected} polynomial(s), got {len(self.polys)}")
            return out
        if len(self.point) != 2:
            return out + ["the point must have two coordinates"]
        for k, f in enumerate(self.polys, 1):
            if f.nvars != 2:
                out.append(f"polynomial {k} is not bivariate")
            elif f.is_zero():
                out.append(f"polynomial {k} is identically zero")
            elif f.degree_in(1) == 0:
                out.append(f"polynomial {k} has degree 0 in X2")
            elif f.evaluate(self.point) != 0:
                out.append(f"polynomial {k} does not vanish at the point")
        if self.theta.center != self.point[0]:
            out.append("theta is not centered at xi_1")
        if self.theta.constant_term() != self.point[1]:
            out.append("the constant term of theta differs from xi_2")
        out += exponent_violations(self.theta, "theta")
        if self.L < 0:
            out.append("L must be nonnegative")
        return out

    def to_dict(self) -> dict:
        return {
            "variables": list(self.variables),
            "polys": [f.to_string(self.variables) for f in self.polys],
            "point": [format_rational(x) for x in self.point],
            "theta": self.theta.to_dict(),
            "L": format_rational(self.L),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BivariateQuery":
        names = tuple(data.get("variables") or default_names(2))
        return cls(
            tuple(poly_parse(s, names) for s in data["polys"]),
            tuple(as_rational(x) for x in data["point"]),
            PuiseuxPoly.from_dict(data["theta"]),
            as_rational(data["L"]),
            names,
        )


@dataclass(frozen=True)
class RegularRefinement:
    """Agreement of theta with the unique power-series root at a regular point."""

    K: int
    exponent_bound: Fraction
    agrees: bool
    lift: PuiseuxPoly
    source: int  # index of the polynomial whose lift was used

    def to_dict(self) -> dict:
        return {
            "K": self.K,
            "exponent_bound": format_rational(self.exponent_bound),
            "agrees": self.agrees,
            "lift": self.lift.to_dict(),
            "source": self.source,
        }


@dataclass
class PrefixCertificate:
    kind: str
    verdict: Verdict
    query: BivariateQuery
    orders: list = field(default_factory=list)
    ladder: list = field(default_factory=list)
    threshold: Optional[Fraction] = None
    M: Optional[int] = None
    certified_prefix: Optional[PuiseuxPoly] = None
    bound_data: dict = field(default_factory=dict)
    refinement: Optional[RegularRefinement] = None
    violations: list = field(default_factory=list)
    reasons: list = field(default_factory=list)

    @property
    def statement(self) -> str:
        if self.verdict is not Verdict.CERTIFIED:
            return NO_CLAIM
        if self.kind == LEMMA:
            return "a branch of V(q) through xi has a parametrization (t, theta_M + ...)"
        return "f1 and f2 share a curve through xi with a parametrization (t, theta_M + ...)"

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": self.kind,
            "verdict": self.verdict.value,
            "statement": self.statement,
            "query": self.query.to_dict(),
            "orders": [format_order(o) for o in self.orders],
            "ladder": [format_rational(g) for g in self.ladder],
            "threshold": None if self.threshold is None else format_rational(self.threshold),
            "M": self.M,
            "certified_prefix": None if self.certified_prefix is None else self.certified_prefix.to_dict(),
            "bound_data": self.bound_data,
            "refinement": None if self.refinement is None else self.refinement.to_dict(),
            "violations": list(self.violations),
            "reasons": list(self.reasons),
        }


def _order_at(f: MultiPoly, theta: PuiseuxPoly) -> OrderValue:
    return substitution_order(f, [PuiseuxPoly.identity(theta.center), theta])


def leading_y_coefficient(q: MultiPoly) -> UniPoly:
    return y_coefficients(q)[-1]


def _agreement(theta: PuiseuxPoly, f: MultiPoly, point, bound: Fraction, source: int) -> RegularRefinement:
    K = floor(bound)
    lift = regular_lift(f, point[0], point[1], max(K, 0))
    agrees = theta.truncate(bound) == lift.truncate(bound)
    return RegularRefinement(K, bound, agrees, lift, source)


def lemma_prefix_certificate(query: BivariateQuery) -> PrefixCertificate:
    bad = query.violations(1)
    if bad:
        return PrefixCertificate(LEMMA, Verdict.PRECONDITION_VIOLATED, query, violations=bad)
    (q,) = query.polys
    xi1, xi2 = query.point
    L = query.L
    deg_y = q.degree_in(1)
    lead = leading_y_coefficient(q)
    mult = root_multiplicity(lead, xi1)
    order = _order_at(q, query.theta)
    ladder = series_ladder(query.theta)
    threshold = (L - mult) / deg_y
    reasons = []
    if not order > L:
        reasons.append(f"ord(q(t, theta)) = {format_order(order)} is not > L = {format_rational(L)}")
    if L < mult:
        reasons.append(f"L = {format_rational(L)} < mult(xi_1, c) = {mult}")
    data = {
        "order": format_order(order),
        "deg_Y": deg_y,
        "leading_coefficient": lead.to_string("x1"),
        "mult_xi1_c": mult,
        "L": format_rational(L),
    }
    if reasons:
        return PrefixCertificate(
            LEMMA, Verdict.INCONCLUSIVE, query, [order], ladder, threshold, bound_data=data, reasons=reasons
        )
    M = prefix_index(ladder, threshold)
    prefix = query.theta.truncate(ladder[M])
    refinement = None
    if q.partial(1).evaluate(query.point) != 0:
        refinement = _agreement(query.theta, q, query.point, L - mult, 0)
    return PrefixCertificate(
        LEMMA, Verdict.CERTIFIED, query, [order], ladder, threshold, M, prefix, data, refinement
    )


def lemma_regular_refinement(query: BivariateQuery) -> RegularRefinement:
    cert = lemma_prefix_certificate(query)
    if cert.verdict is not Verdict.CERTIFIED:
        raise PreconditionError("the prefix lemma does not certify this query")
    if cert.refinement is None:
        raise SingularPointError("dq/dX2 vanishes at the point")
    return cert.refinement


def degree_table(f1: MultiPoly, f2: MultiPoly) -> dict:
    """``d_ij = deg_{X_i}(f_j)`` keyed as 'd11', 'd21', 'd12', 'd22'."""
    return {
        "d11": f1.degree_in(0),
        "d21": f1.degree_in(1),
        "d12": f2.degree_in(0),
        "d22": f2.degree_in(1),
    }


def proposition_common_curve(query: BivariateQuery) -> PrefixCertificate:
    bad = query.violations(2)
    if bad:
        return PrefixCertificate(COMMON_CURVE, Verdict.PRECONDITION_VIOLATED, query, violations=bad)
    f1, f2 = query.polys
    L = query.L
    d = degree_table(f1, f2)
    gate = d["d11"] * d["d22"] + d["d12"] * d["d21"]
    orders = [_order_at(f1, query.theta), _order_at(f2, query.theta)]
    ladder = series_ladder(query.theta)
    threshold = (
        Fraction(L - gate - min(d["d11"], d["d12"]), min(d["d21"], d["d22"])) + d["d11"] + d["d12"]
    )
    reasons = []
    for j, o in enumerate(orders, 1):
        if not o > L:
            reasons.append(f"ord(f{j}(t, theta)) = {format_order(o)} is not > L = {format_rational(L)}")
    if L < gate:
        reasons.append(f"L = {format_rational(L)} < d11*d22 + d12*d21 = {gate}")
    data = dict(d, resultant_degree_gate=gate, L=format_rational(L))
    if reasons:
        return PrefixCertificate(
            COMMON_CURVE, Verdict.INCONCLUSIVE, query, orders, ladder, threshold, bound_data=data, reasons=reasons
        )
    M = prefix_index(ladder, threshold)
    prefix = query.theta.truncate(ladder[M])
    refinement = None
    for j, f in enumerate((f1, f2)):
        if f.partial(1).evaluate(query.point) != 0:
            K = floor(L) - min(d["d11"], d["d12"])
            refinement = _agreement(query.theta, f, query.point, Fraction(K), j)
            break
    return PrefixCertificate(
        COMMON_CURVE, Verdict.CERTIFIED, query, orders, ladder, threshold, M, prefix, data, refinement
    )


def proposition_regular_refinement(query: BivariateQuery) -> RegularRefinement:
    cert = proposition_common_curve(query)
    if cert.verdict is not Verdict.CERTIFIED:
        raise PreconditionError("the common-curve proposition does not certify this query")
    if cert.refinement is None:
        raise SingularPointError("both partial derivatives in X2 vanish at the point")
    return cert.refinement
