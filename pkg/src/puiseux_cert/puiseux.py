"""Finite Puiseux polynomials: exact truncated Puiseux series.

A :class:`PuiseuxPoly` is a finite sum ``sum c_i (t - center)^g_i`` with
rational exponents ``g_i`` and rational coefficients. Orders are exact
rationals, or ``INF`` for the zero series.
"""

from __future__ import annotations

import math
from math import lcm
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .poly import MultiPoly, as_rational, format_rational

INF = math.inf
OrderValue = Union[Fraction, float]


def format_order(value: OrderValue) -> str:
    return "inf" if value == INF else format_rational(value)


def parse_order(text: str) -> OrderValue:
    return INF if text == "inf" else as_rational(text)


class CenterMismatch(ValueError):
    pass


class PuiseuxPoly:
    __slots__ = ("center", "terms")

    def __init__(self, center, terms: Iterable[tuple] = ()):
        self.center = as_rational(center)
        acc: dict[Fraction, Fraction] = {}
        for exp, coeff in terms:
            exp, coeff = as_rational(exp), as_rational(coeff)
            acc[exp] = acc.get(exp, Fraction(0)) + coeff
        self.terms: tuple[tuple[Fraction, Fraction], ...] = tuple(
            (e, c) for e, c in sorted(acc.items()) if c
        )

    @classmethod
    def _raw(cls, center: Fraction, acc: dict) -> "PuiseuxPoly":
        obj = cls.__new__(cls)
        obj.center = center
        obj.terms = tuple((e, c) for e, c in sorted(acc.items()) if c)
        return obj

    @classmethod
    def constant(cls, center, value) -> "PuiseuxPoly":
        return cls(center, [(0, value)])

    @classmethod
    def identity(cls, center) -> "PuiseuxPoly":
        """The series ``t`` itself, i.e. ``center + (t - center)``."""
        return cls(center, [(0, center), (1, 1)])

    @classmethod
    def monomial(cls, center, exp, coeff=1) -> "PuiseuxPoly":
        return cls(center, [(exp, coeff)])

    def is_zero(self) -> bool:
        return not self.terms

    def order(self) -> OrderValue:
        return self.terms[0][0] if self.terms else INF

    def exponents(self) -> list[Fraction]:
        return [e for e, _ in self.terms]

    def coefficient(self, exp) -> Fraction:
        exp = as_rational(exp)
        for e, c in self.terms:
            if e == exp:
                return c
        return Fraction(0)

    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def truncate(self, max_exp) -> "PuiseuxPoly":
        """Keep only the terms with exponent <= ``max_exp``."""
        return PuiseuxPoly._raw(self.center, {e: c for e, c in self.terms if e <= max_exp})

    def _check(self, other: "PuiseuxPoly") -> None:
        if other.center != self.center:
            raise CenterMismatch(
                f"centers differ: {format_rational(self.center)} vs {format_rational(other.center)}"
            )

    def _lift(self, other) -> "PuiseuxPoly":
        if isinstance(other, PuiseuxPoly):
            self._check(other)
            return other
        return PuiseuxPoly.constant(self.center, other)

    def __add__(self, other) -> "PuiseuxPoly":
        other = self._lift(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return PuiseuxPoly._raw(self.center, acc)

    __radd__ = __add__

    def __neg__(self) -> "PuiseuxPoly":
        return PuiseuxPoly._raw(self.center, {e: -c for e, c in self.terms})

    def __sub__(self, other) -> "PuiseuxPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "PuiseuxPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "PuiseuxPoly":
        if not isinstance(other, PuiseuxPoly):
            k = as_rational(other)
            return PuiseuxPoly._raw(self.center, {e: c * k for e, c in self.terms})
        self._check(other)
        acc: dict[Fraction, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return PuiseuxPoly._raw(self.center, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PuiseuxPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = PuiseuxPoly.constant(self.center, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, PuiseuxPoly):
            return NotImplemented
        return self.center == other.center and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.center, self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        if self.center == 0:
            base = "t"
        elif self.center > 0:
            base = f"(t - {format_rational(self.center)})"
        else:
            base = f"(t + {format_rational(-self.center)})"
        pieces = []
        for e, c in self.terms:
            if e == 0:
                mono = ""
            elif e == 1:
                mono = base
            elif e.denominator == 1:
                mono = f"{base}^{e}"
            else:
                mono = f"{base}^({e})"
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"PuiseuxPoly(center={format_rational(self.center)}, {str(self)!r})"

    def to_dict(self) -> dict:
        return {
            "center": format_rational(self.center),
            "terms": [{"exp": format_rational(e), "coeff": format_rational(c)} for e, c in self.terms],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PuiseuxPoly":
        if not isinstance(data, dict) or "center" not in data or "terms" not in data:
            raise ValueError("a series needs 'center' and 'terms' fields")
        terms = []
        for k, item in enumerate(data["terms"]):
            try:
                terms.append((as_rational(item["exp"]), as_rational(item["coeff"])))
            except (KeyError, TypeError) as exc:
                raise ValueError(f"term {k}: needs string fields 'exp' and 'coeff'") from exc
        exps = [e for e, _ in terms]
        if len(set(exps)) != len(exps):
            raise ValueError("repeated exponent in series terms")
        return cls(as_rational(data["center"]), terms)


class InvalidPuiseuxVector(ValueError):
    pass


class PuiseuxVector:
    """Vector ``(t, theta_2, ..., theta_n)`` of series sharing one center."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[PuiseuxPoly]):
        comps = tuple(components)
        if not comps:
            raise InvalidPuiseuxVector("empty Puiseux vector")
        center = comps[0].center
        for k, comp in enumerate(comps):
            if comp.center != center:
                raise InvalidPuiseuxVector(f"component {k + 1} has a different center")
        if comps[0] != PuiseuxPoly.identity(center):
            raise InvalidPuiseuxVector("component 1 must be exactly the series t")
        self.components = comps

    @classmethod
    def from_tail(cls, center, tail: Sequence[PuiseuxPoly]) -> "PuiseuxVector":
        return cls([PuiseuxPoly.identity(center), *tail])

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, k: int) -> PuiseuxPoly:
        return self.components[k]

    def __iter__(self):
        return iter(self.components)

    def __eq__(self, other) -> bool:
        return isinstance(other, PuiseuxVector) and self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    @property
    def center(self) -> Fraction:
        return self.components[0].center

    def point(self) -> tuple[Fraction, ...]:
        return (self.center,) + tuple(c.constant_term() for c in self.components[1:])

    def ladder(self) -> list[Fraction]:
        """Exponents ``0 = g_0 < g_1 < ...`` used by components 2..n."""
        exps = {Fraction(0)}
        for comp in self.components[1:]:
            exps.update(comp.exponents())
        return sorted(exps)

    def truncate(self, max_exp) -> "PuiseuxVector":
        return PuiseuxVector([self.components[0]] + [c.truncate(max_exp) for c in self.components[1:]])

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"

    def __repr__(self) -> str:
        return f"PuiseuxVector{self}"


def _int_mul(a: dict, b: dict, cap) -> dict:
    out: dict[int, int] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            if cap is None or e <= cap:
                out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def substitute(f: MultiPoly, theta: Sequence[PuiseuxPoly], max_exp=None) -> PuiseuxPoly:
    """Exact ``f(theta)``; ``theta`` may be a PuiseuxVector or any series list.

    With ``max_exp`` set, only the terms of exponent <= ``max_exp`` are
    produced; they are exact because every series has nonnegative
    exponents, so dropped terms never feed back into lower ones.
    """
    comps = list(theta)
    if len(comps) != f.nvars:
        raise ValueError(f"arity mismatch: polynomial in {f.nvars} variables, {len(comps)} series")
    center = comps[0].center
    for comp in comps:
        if comp.center != center:
            raise CenterMismatch("series in the vector do not share a center")
    if max_exp is not None and any(e < 0 for comp in comps for e, _ in comp.terms):
        raise ValueError("truncated substitution needs nonnegative exponents")
    # integer exponents over a common denominator, integer coefficients over
    # one denominator per component
    D = lcm(1, *(e.denominator for comp in comps for e, _ in comp.terms))
    cap = None if max_exp is None else math.floor(as_rational(max_exp) * D)
    dens = [lcm(1, *(c.denominator for _, c in comp.terms)) for comp in comps]
    ints = [
        {int(e * D): int(c * den) for e, c in comp.terms if cap is None or e * D <= cap}
        for comp, den in zip(comps, dens)
    ]
    powers: list[dict[int, dict]] = [{0: {0: 1}, 1: p} for p in ints]

    def power(i: int, k: int) -> dict:
        cache = powers[i]
        if k not in cache:
            top = max(j for j in cache if j < k)
            value = cache[top]
            for j in range(top + 1, k + 1):
                value = _int_mul(value, ints[i], cap)
                cache[j] = value
        return cache[k]

    scales = {}
    for exps, coeff in f.terms.items():
        scale = Fraction(coeff)
        for i, e in enumerate(exps):
            if e:
                scale /= dens[i] ** e
        scales[exps] = scale
    common = lcm(1, *(s.denominator for s in scales.values()))
    acc: dict[int, int] = {}
    for exps, scale in scales.items():
        prod = {0: 1}
        for i, e in enumerate(exps):
            if e:
                prod = _int_mul(prod, power(i, e), cap)
        k = scale.numerator * (common // scale.denominator)
        for e, c in prod.items():
            acc[e] = acc.get(e, 0) + k * c
    return PuiseuxPoly._raw(center, {Fraction(e, D): Fraction(c, common) for e, c in acc.items() if c})


def substitution_order(f: MultiPoly, theta: Sequence[PuiseuxPoly]) -> OrderValue:
    """Exact order of ``f(theta)``, found with growing truncation bounds."""
    comps = list(theta)
    if any(e < 0 for comp in comps for e, _ in comp.terms):
        return substitute(f, comps).order()
    tops = [comp.terms[-1][0] if comp.terms else Fraction(0) for comp in comps]
    full = max((sum(e * t for e, t in zip(exps, tops)) for exps in f.terms), default=Fraction(0))
    # no cancellation can push the order below the smallest monomial order
    lows = [
        sum(e * comp.terms[0][0] for e, comp in zip(exps, comps) if e)
        for exps in f.terms
        if all(comp.terms or not e for e, comp in zip(exps, comps))
    ]
    if not lows:
        return INF
    bound = max(Fraction(1), min(lows))
    while True:
        value = substitute(f, comps, max_exp=min(bound, full))
        if not value.is_zero():
            return value.order()
        if bound >= full:
            return INF
        bound *= 2


def vanishing_order_profile(system: Sequence[MultiPoly], theta: Sequence[PuiseuxPoly]) -> list[OrderValue]:
    return [substitution_order(f, theta) for f in system]
