"""Randomized cross-checks of the certificates against independent oracles.

The oracle for the common-curve certificate is: compute gcd(f1, f2),
expand its branches through the point with the Newton polygon, and look
for one that agrees with theta through the certified index M.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .bivariate import BivariateQuery, degree_table, proposition_common_curve
from .certificates import Verdict
from .newton import OBSTRUCTED, expand_branches
from .poly import MultiPoly
from .puiseux import PuiseuxPoly, substitution_order
from .resultant import gcd_bivariate, resultant_y, sylvester_resultant


@dataclass(frozen=True)
class HarnessConfig:
    pairs: int = 200
    max_degree: int = 3
    coeff_range: int = 3
    seed: int = 0


def random_poly(rng: random.Random, max_degree: int, coeff_range: int, density: float = 0.5) -> MultiPoly:
    """Random bivariate polynomial of total degree <= max_degree, never zero."""
    while True:
        terms = {}
        for i in range(max_degree + 1):
            for j in range(max_degree + 1 - i):
                if rng.random() < density:
                    terms[(i, j)] = rng.randint(-coeff_range, coeff_range)
        f = MultiPoly(2, terms)
        if not f.is_zero():
            return f


def random_curve_through_origin(rng: random.Random, max_degree: int, coeff_range: int) -> MultiPoly:
    """Random q with q(0, 0) = 0, positive Y-degree and q(0, Y) not identically zero."""
    while True:
        q = random_poly(rng, max_degree, coeff_range)
        q = q - q.coefficient((0, 0))
        if q.is_zero() or q.degree_in(1) == 0:
            continue
        if any(i == 0 for i, _ in q.terms):
            return q


@dataclass
class PairCase:
    g: MultiPoly
    h1: MultiPoly
    h2: MultiPoly

    @property
    def f1(self) -> MultiPoly:
        return self.g * self.h1

    @property
    def f2(self) -> MultiPoly:
        return self.g * self.h2


def pair_corpus(config: HarnessConfig) -> list[PairCase]:
    rng = random.Random(config.seed)
    out = []
    while len(out) < config.pairs:
        g = random_curve_through_origin(rng, config.max_degree, config.coeff_range)
        h1 = random_poly(rng, config.max_degree, config.coeff_range)
        h2 = random_poly(rng, config.max_degree, config.coeff_range)
        out.append(PairCase(g, h1, h2))
    return out


def candidate_thetas(case: PairCase, L: Fraction, rng: random.Random) -> list[PuiseuxPoly]:
    """Truncated branches of g through the origin, plus perturbed copies."""
    out = []
    for br in expand_branches(case.g, 0, 0, L):
        if br.status == OBSTRUCTED:
            continue
        theta = br.expansion.truncate(L)
        out.append(theta)
        bump = Fraction(rng.randint(1, max(1, int(L))))
        out.append(theta + PuiseuxPoly.monomial(0, bump, rng.choice([-1, 1])))
    return out


def oracle_agrees(f1: MultiPoly, f2: MultiPoly, theta: PuiseuxPoly, upto: Fraction) -> bool:
    g = gcd_bivariate(f1, f2)
    if g.degree_in(1) == 0 or g.evaluate([theta.center, theta.constant_term()]) != 0:
        return False
    target = theta.truncate(upto)
    precision = max(upto, Fraction(1))
    for br in expand_branches(g, theta.center, theta.constant_term(), precision):
        if br.status != OBSTRUCTED and br.expansion.truncate(upto) == target:
            return True
    return False


@dataclass
class HarnessResult:
    cases: int = 0
    queries: int = 0
    certified: int = 0
    failures: list = field(default_factory=list)
    resultants_checked: int = 0
    resultant_failures: list = field(default_factory=list)


def resultant_bound_holds(f: MultiPoly, g: MultiPoly) -> bool | None:
    """None when the check does not apply (zero X2-degree or zero resultant)."""
    if f.degree_in(1) == 0 or g.degree_in(1) == 0:
        return None
    res = resultant_y(f, g)
    if res != sylvester_resultant(f, g):
        return False
    if not res:
        return None
    d = degree_table(f, g)
    return res.degree <= d["d11"] * d["d22"] + d["d12"] * d["d21"]


def run_oracle_harness(config: HarnessConfig = HarnessConfig()) -> HarnessResult:
    rng = random.Random(config.seed + 1)
    result = HarnessResult()
    for case in pair_corpus(config):
        result.cases += 1
        f1, f2 = case.f1, case.f2
        for a, b in ((f1, f2), (case.h1, case.h2), (case.g, case.h1)):
            verdict = resultant_bound_holds(a, b)
            if verdict is None:
                continue
            result.resultants_checked += 1
            if not verdict:
                result.resultant_failures.append((a, b))
        d = degree_table(f1, f2)
        L = Fraction(d["d11"] * d["d22"] + d["d12"] * d["d21"])
        for theta in candidate_thetas(case, L, rng):
            query = BivariateQuery((f1, f2), (0, 0), theta, L)
            cert = proposition_common_curve(query)
            result.queries += 1
            if cert.verdict is not Verdict.CERTIFIED:
                continue
            result.certified += 1
            if not oracle_agrees(f1, f2, theta, cert.ladder[cert.M]):
                result.failures.append(query)
    return result


def random_residual_cases(count: int, seed: int, max_degree: int = 4, coeff_range: int = 3):
    """Random q with a rational point (0, y0), y0 in -2..2."""
    rng = random.Random(seed)
    cases = []
    y = MultiPoly.variable(2, 1)
    while len(cases) < count:
        q0 = random_curve_through_origin(rng, max_degree, coeff_range)
        y0 = rng.randint(-2, 2)
        q = q0.compose_variable(1, y - y0)
        cases.append((q, Fraction(y0)))
    return cases


def residual_contract_violations(q: MultiPoly, y0: Fraction, precision: Fraction) -> list:
    bad = []
    for br in expand_branches(q, 0, y0, precision):
        if br.status == OBSTRUCTED:
            continue
        residual = substitution_order(q, [PuiseuxPoly.identity(0), br.expansion])
        if not residual > precision:
            bad.append(br)
    return bad
