from fractions import Fraction

import pytest
import sympy
from hypothesis import given

from conftest import NAMES2, multipolys, puiseux_polys
from puiseux_cert.parse import poly_parse
from puiseux_cert.poly import MultiPoly
from puiseux_cert.puiseux import (
    INF,
    CenterMismatch,
    InvalidPuiseuxVector,
    PuiseuxPoly,
    PuiseuxVector,
    substitute,
    substitution_order,
    vanishing_order_profile,
)

F = Fraction


def S(*terms, center=0):
    return PuiseuxPoly(center, terms)


def test_orders():
    assert S((0, 1), (F(3, 2), 1)).order() == 0
    assert S((F(13, 2), 1)).order() == F(13, 2)
    assert S().order() == INF and INF > F(10**9)


def test_arithmetic_examples():
    assert S((0, 1), (1, 1)) * S((0, 1), (1, -1)) == S((0, 1), (2, -1))
    assert S((F(1, 2), 1)) ** 4 == S((2, 1))
    assert S((1, 1), (F(3, 2), 1)) + S((1, -1)) == S((F(3, 2), 1))


def test_terms_sorted_and_nonzero():
    s = S((2, 1), (1, 3), (2, -1), (0, 0))
    assert s.terms == ((F(1), F(3)),)


def test_center_mismatch():
    with pytest.raises(CenterMismatch):
        S((0, 1)) + S((0, 1), center=1)


def test_printing():
    assert str(S((0, 1), (F(3, 2), 1))) == "1 + t^(3/2)"
    assert str(S()) == "0"
    assert str(S((1, -2), center=F(1, 2))) == "-2*(t - 1/2)"


@given(puiseux_polys(), puiseux_polys())
def test_order_multiplicative(s, r):
    assert (s * r).order() == s.order() + r.order()


@given(puiseux_polys(), puiseux_polys())
def test_order_of_sum(s, r):
    assert (s + r).order() >= min(s.order(), r.order())


@given(puiseux_polys())
def test_dict_roundtrip(s):
    assert PuiseuxPoly.from_dict(s.to_dict()) == s


def test_from_dict_rejects_repeated_exponents():
    with pytest.raises(ValueError):
        PuiseuxPoly.from_dict({"center": "0", "terms": [{"exp": "1", "coeff": "1"}, {"exp": "1", "coeff": "2"}]})


def test_vector_invariants(t0):
    PuiseuxVector([t0, S((0, 1))])
    with pytest.raises(InvalidPuiseuxVector):
        PuiseuxVector([S((1, 2)), S()])
    with pytest.raises(InvalidPuiseuxVector):
        PuiseuxVector([t0, S(center=1)])
    v = PuiseuxVector.from_tail(F(1, 2), [S((0, 3), center=F(1, 2))])
    assert v.point() == (F(1, 2), F(3))


def test_substitute_examples(t0):
    f = poly_parse("x1^2*(x2 - 1)^3", NAMES2)
    assert substitute(f, [t0, S((0, 1), (F(3, 2), 1))]) == S((F(13, 2), 1))
    assert substitute(poly_parse("x2", NAMES2), [t0, S()]).is_zero()
    g = poly_parse("(x1 - x2)*(x1 - 2*x2)", ["x1", "x2", "x3"])
    out = substitute(g, [t0, S((1, 1), (F(3, 2), 1)), S()])
    assert out.order() == F(5, 2)


def test_substitute_matches_sympy(t0):
    # t = u^6 turns every exponent below into an integer power of u
    u = sympy.Symbol("u")
    theta = S((F(1, 2), 2), (F(4, 3), F(-1, 3)), (3, 1))
    f = poly_parse("x2^3 - 2*x1*x2 + x1^4/5", NAMES2)
    got = substitute(f, [t0, theta])
    y = 2 * u**3 - sympy.Rational(1, 3) * u**8 + u**18
    expected = sympy.Poly(sympy.expand(y**3 - 2 * u**6 * y + u**24 / 5), u)
    want = {F(k[0], 6): F(int(sympy.numer(c)), int(sympy.denom(c))) for k, c in expected.terms()}
    assert dict(got.terms) == want


def test_substitute_constant_vector_gives_value():
    f = poly_parse("x1^2 + 3*x1*x2 - 7", NAMES2)
    c = F(2, 3)
    out = substitute(f, [S((0, c), center=c), S((0, 5), center=c)])
    assert out == S((0, f.evaluate([c, 5])), center=c)


def test_arity_mismatch(t0):
    with pytest.raises(ValueError):
        substitute(poly_parse("x1", NAMES2), [t0])


@given(multipolys(), multipolys(), puiseux_polys())
def test_substitute_is_a_ring_morphism(f, g, theta):
    vec = [PuiseuxPoly.identity(0), theta]
    assert substitute(f + g, vec) == substitute(f, vec) + substitute(g, vec)
    assert substitute(f * g, vec) == substitute(f, vec) * substitute(g, vec)


@given(multipolys(), puiseux_polys())
def test_truncated_substitution_is_exact_below_bound(f, theta):
    vec = [PuiseuxPoly.identity(0), theta]
    full = substitute(f, vec)
    for bound in (F(0), F(1, 2), F(3), F(7, 3)):
        assert substitute(f, vec, max_exp=bound) == full.truncate(bound)
    assert substitution_order(f, vec) == full.order()


def test_profile_examples(t0):
    names = ["x1", "x2", "x3"]
    system = [poly_parse(s, names) for s in ("x1^2", "x2", "x3")]
    assert vanishing_order_profile(system, [t0, S(), S()]) == [2, INF, INF]
    assert vanishing_order_profile([], [t0]) == []
    cusp = poly_parse("x2^2 - x1^3", NAMES2)
    assert vanishing_order_profile([cusp], [t0, S((F(3, 2), 1))]) == [INF]
