from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from stablegenus.knot_algebra import KnotExpr, catalog, format_expr, torus
from stablegenus.parser import ParseError, parse, parse_basis

F = Fraction
T27, T211 = torus(2, 7), torus(2, 11)


def test_examples():
    assert parse("3*T(2,7) - 2*T(2,11)") == KnotExpr.from_vector([T27, T211], [3, -2])
    assert parse("3/2*T(2,7) - T(2,11)") == KnotExpr.from_vector([T27, T211], [F(3, 2), -1])
    assert parse("  -T( 2 , 5 )+2 * 4_1") == KnotExpr.from_terms([(torus(2, 5), -1), (catalog("4_1"), 2)])
    assert parse("0") == KnotExpr()


@pytest.mark.parametrize(
    "text,message,position",
    [
        ("T(2,4)", "not coprime", 0),
        ("T(2,3) + T(1,5)", "must be >= 2", 9),
        ("9_42", "unknown catalog knot", 0),
        ("3*", "expected a knot", 2),
        ("3/0*T(2,3)", "zero denominator", 2),
        ("T(2,3) x", "unexpected", 7),
        ("", "empty expression", 0),
        ("T(2 3)", "expected ','", 4),
    ],
)
def test_errors_carry_position(text, message, position):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert message in info.value.message
    assert info.value.position == position


def test_parse_basis():
    assert parse_basis("T(2,7),T(2,11)") == [T27, T211]
    assert parse_basis("3_1, 5_1,5_2,6_2") == [catalog(n) for n in ("3_1", "5_1", "5_2", "6_2")]
    with pytest.raises(ParseError):
        parse_basis("T(2,7),T(7,2)")


knots = st.sampled_from(
    [torus(2, 3), torus(2, 5), T27, T211, torus(3, 5), torus(3, 7), catalog("4_1"), catalog("5_2"), catalog("6_2")]
)
coeffs = st.builds(F, st.integers(-30, 30), st.integers(1, 12))
exprs = st.lists(st.tuples(knots, coeffs), max_size=5).map(KnotExpr.from_terms)


@settings(max_examples=100)
@given(exprs)
def test_print_parse_roundtrip(x):
    text = format_expr(x)
    assert parse(text) == x
    assert format_expr(parse(text)) == text
