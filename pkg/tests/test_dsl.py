from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from superbrackets import GradedPolynomial, Parity, parse, format_poly
from superbrackets.dsl import (
    DSLSyntaxError, UndeclaredIdentifier, OddExponent, Session, parse_expr,
)
from superbrackets.sampling import random_poly, rng

from common import M2, M3, e, var


def test_parse_f1_session():
    s = parse("manifold { even x, even y } let P = s(x)*s(y)")
    assert [n for n, _ in s.manifold.coords] == ["x", "y"]
    assert s.structure_poly == var(s.manifold.s("x")) * var(s.manifold.s("y"))


def test_odd_exponent_is_an_error():
    with pytest.raises(OddExponent):
        parse("manifold { even x } let P = s(x)^2")


def test_even_power_of_odd_coordinate_fiber():
    s = parse("manifold { odd th } let P = s(th)^2")
    assert s.structure_poly == var(s.manifold.s("th")) ** 2


def test_rational_coefficient():
    s = parse("manifold { even x } let P = 1/2 * x * s(x)")
    [(key, c)] = s.structure_poly.terms.items()
    assert c == Fraction(1, 2)


def test_comments_whitespace_and_bindings():
    src = """
    # the F2 fixture
    manifold {even x,even y,
              odd th}
    let Q = s(x)*s(y)   # a bivector
    let P = Q*s(th)
    """
    s = parse(src)
    assert s.structure_poly == e(M3, "s(x)*s(y)*s(th)")
    assert set(s.bindings) == {"Q", "P"}


def test_undeclared_identifier_position():
    with pytest.raises(UndeclaredIdentifier) as ei:
        parse("manifold { even x }\nlet P = s(x) * z")
    assert (ei.value.line, ei.value.col) == (2, 16)
    assert str(ei.value).startswith("2:16:")


def test_use_before_declaration():
    with pytest.raises(UndeclaredIdentifier):
        parse("manifold { even x } let P = Q let Q = x")


def test_syntax_error_reports_expected():
    with pytest.raises(DSLSyntaxError) as ei:
        parse("manifold { even x } let P = (x + ")
    assert "expected" in str(ei.value)
    with pytest.raises(DSLSyntaxError):
        parse("manifold { x }")
    with pytest.raises(DSLSyntaxError):
        parse("manifold { even x } let P = 1/0")
    with pytest.raises(DSLSyntaxError):
        parse("manifold { even s }")
    with pytest.raises(DSLSyntaxError):
        parse("manifold { even x, odd x }")


def test_print_examples():
    assert format_poly(e(M2, "s(x)*s(y)")) == "s(x)*s(y)"
    assert format_poly(GradedPolynomial()) == "0"
    assert format_poly(-e(M2, "s(x)*s(y)")) == "-s(x)*s(y)"
    assert format_poly(e(M2, "s(y)*s(x)")) == "-s(x)*s(y)"
    assert format_poly(e(M2, "3 - 1/2*y*x^2 + d(x)")) == "3 + d(x) - 1/2*x^2*y"


def test_leading_minus_round_trips():
    p = e(M2, "-x + 2*s(y)")
    assert e(M2, format_poly(p)) == p


FIBER_VARS = {
    "M2": (M2, list(M2.base) + [M2.s(n) for n in M2.names()] + [M2.d(n) for n in M2.names()]),
    "M3": (M3, list(M3.base) + [M3.s(n) for n in M3.names()] + [M3.d(n) for n in M3.names()]),
}


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 9), st.sampled_from(sorted(FIBER_VARS)))
def test_parse_print_round_trip(seed, which):
    M, vs = FIBER_VARS[which]
    p = random_poly(rng(seed), vs, max_terms=5, max_total=4, nonzero=False)
    text = format_poly(p)
    assert parse_expr(text, Session(M)) == p
    assert format_poly(parse_expr(text, Session(M))) == text
