from fractions import Fraction

import pytest
from hypothesis import given

from conftest import NAMES2, multipolys
from puiseux_cert.parse import PolySyntaxError, UnknownVariableError, poly_parse
from puiseux_cert.poly import MultiPoly


def test_four_term_input():
    f = poly_parse("x2 - 1 + x1 + x1^3", NAMES2)
    assert len(f.terms) == 4
    assert f.coefficient((0, 0)) == -1


def test_zero_is_empty():
    assert dict(poly_parse("0", NAMES2).terms) == {}


def test_square_expands():
    f = poly_parse("(x1 - 2*x2)^2", NAMES2)
    assert f == MultiPoly(2, {(2, 0): 1, (1, 1): -4, (0, 2): 4})


def test_rationals_and_unary_minus():
    f = poly_parse("-3/4*x1 + -(x2)^2/2", NAMES2)
    assert f.coefficient((1, 0)) == Fraction(-3, 4)
    assert f.coefficient((0, 2)) == Fraction(-1, 2)


def test_power_binds_tighter_than_unary_minus():
    assert poly_parse("-x1^2", NAMES2) == -poly_parse("x1^2", NAMES2)


@pytest.mark.parametrize("text", ["x1 x2", "2x1", "x1^", "(x1 + 1", "x1 + * x2", "x1^2^3", "x1^-1", "x1 / x2", ""])
def test_syntax_errors(text):
    with pytest.raises(PolySyntaxError):
        poly_parse(text, NAMES2)


def test_error_reports_position():
    with pytest.raises(PolySyntaxError) as info:
        poly_parse("x1 + * x2", NAMES2)
    assert info.value.position == 5


def test_unknown_variable():
    with pytest.raises(UnknownVariableError):
        poly_parse("x1 + y", NAMES2)


def test_division_by_zero_constant():
    with pytest.raises(PolySyntaxError):
        poly_parse("x1/0", NAMES2)


@given(multipolys())
def test_print_parse_roundtrip(f):
    assert poly_parse(f.to_string(NAMES2), NAMES2) == f


@given(multipolys(nvars=3))
def test_roundtrip_custom_names(f):
    names = ["a", "bb", "z_3"]
    assert poly_parse(f.to_string(names), names) == f
