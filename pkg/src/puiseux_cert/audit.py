"""Third-party re-check of emitted certificates.

A certificate dict embeds its query, so it can be re-derived from scratch.
The audit recomputes the certificate and compares every field, then checks
the soundness gate directly from the stored numbers.
"""

from __future__ import annotations

from fractions import Fraction

from .bivariate import COMMON_CURVE, LEMMA, BivariateQuery, lemma_prefix_certificate, proposition_common_curve
from .multivar import CURVE_PREFIX, NONISOLATION, SystemQuery, certify_curve_prefix, certify_nonisolated
from .puiseux import parse_order

_CERTIFIERS = {
    LEMMA: (BivariateQuery, lemma_prefix_certificate),
    COMMON_CURVE: (BivariateQuery, proposition_common_curve),
    NONISOLATION: (SystemQuery, certify_nonisolated),
    CURVE_PREFIX: (SystemQuery, certify_curve_prefix),
}


def _gate_problems(data: dict) -> list[str]:
    # checks that need nothing but the stored numbers
    problems = []
    if data.get("verdict") != "certified":
        return problems
    L = Fraction(data["L"] if "L" in data else data["query"]["L"])
    if any(not parse_order(o) > L for o in data.get("orders", [])):
        problems.append("orders")
    kind = data["kind"]
    if kind == NONISOLATION and L < data["noether_bound"]:
        problems.append("noether_bound")
    if kind == CURVE_PREFIX and L < data["noether_bound"] * data["degree_bound"]:
        problems.append("degree_bound")
    if "ladder" in data and data.get("threshold") is not None:
        ladder = [Fraction(g) for g in data["ladder"]]
        threshold = Fraction(data["threshold"])
        expected = max(i for i, g in enumerate(ladder) if g <= threshold)
        if data.get("M") != expected:
            problems.append("M")
    return problems


def audit_mismatches(cert, query=None) -> list[str]:
    """Names of the fields that do not survive recomputation (empty if sound)."""
    data = cert.to_dict() if hasattr(cert, "to_dict") else cert
    try:
        query_cls, certify = _CERTIFIERS[data["kind"]]
    except (KeyError, TypeError):
        return ["kind"]
    problems = []
    try:
        stored_query = query_cls.from_dict(data["query"])
    except (KeyError, TypeError, ValueError):
        return ["query"]
    if query is not None and query.to_dict() != data["query"]:
        problems.append("query")
    try:
        fresh = certify(query if query is not None else stored_query).to_dict()
    except (ValueError, ArithmeticError):
        return sorted(set(problems) | {"query"})
    for key in sorted(set(data) | set(fresh)):
        if key != "query" and data.get(key) != fresh.get(key):
            problems.append(key)
    try:
        problems += _gate_problems(data)
    except (KeyError, TypeError, ValueError, ZeroDivisionError):
        problems.append("gate")
    return sorted(set(problems))


def audit_certificate(cert, query=None) -> bool:
    return not audit_mismatches(cert, query)
