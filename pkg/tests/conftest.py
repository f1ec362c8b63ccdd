import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from puiseux_cert.poly import MultiPoly
from puiseux_cert.puiseux import PuiseuxPoly

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

NAMES2 = ["x1", "x2"]

small_ints = st.integers(-3, 3)
rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def multipolys(draw, nvars=2, max_deg=3, max_terms=5):
    n_terms = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n_terms):
        exps = tuple(draw(st.integers(0, max_deg)) for _ in range(nvars))
        terms[exps] = draw(rationals)
    return MultiPoly(nvars, terms)


@st.composite
def puiseux_polys(draw, center=0, max_terms=4, min_exp=0):
    n = draw(st.integers(0, max_terms))
    terms = [
        (Fraction(draw(st.integers(min_exp, 12)), draw(st.integers(1, 3))), draw(rationals))
        for _ in range(n)
    ]
    return PuiseuxPoly(center, terms)


@pytest.fixture
def t0():
    return PuiseuxPoly.identity(0)


def pytest_terminal_summary(terminalreporter):
    module = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(f"{'PASS' if results[n] else 'FAIL'} criterion {n}")
