from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polarize.errors import ParseError
from polarize.parser import evaluate, parse_expr, parse_poly1, parse_poly2, render
from polarize.poly import Poly1, Poly2, eval1, eval2

from conftest import ROSE_X, ROSE_Y, ratios


def _convolve(*factors):
    """Dense coefficient-list product, an independent check on the expander."""
    out = [Fraction(1)]
    for f in factors:
        new = [Fraction(0)] * (len(out) + len(f) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(f):
                new[i + j] += a * b
        out = new
    return {k: c for k, c in enumerate(out) if c}


def test_rose_numerator_expansion():
    one_minus_t2 = [1, 0, -1]
    expected = _convolve([0, 4], one_minus_t2, one_minus_t2, [1, 0, -14, 0, 1])
    assert expected == {1: 4, 3: -64, 5: 120, 7: -64, 9: 4}
    assert parse_poly1(ROSE_X).coeffs == expected
    assert parse_poly1(ROSE_Y).coeffs == _convolve([0, 0, 8], one_minus_t2, [3, 0, -10, 0, 3])


def test_enneper():
    p = parse_poly2("u - u^3/3 + u v^2")
    assert p.coeffs == {(1, 0): 1, (3, 0): Fraction(-1, 3), (1, 2): 1}


@pytest.mark.parametrize("src,expected", [
    ("-t^2", {2: -1}),
    ("2t^2", {2: 2}),
    ("(1+t)^2", {0: 1, 1: 2, 2: 1}),
    ("t - -t", {1: 2}),
    ("3/4 t", {1: Fraction(3, 4)}),
    ("t*t*t", {3: 1}),
    ("0.5 t", {1: Fraction(1, 2)}),
    ("t^0", {0: 1}),
    ("(t)(t)", {2: 1}),
])
def test_precedence_and_juxtaposition(src, expected):
    assert parse_poly1(src).coeffs == expected


def test_uv_juxtaposed():
    assert parse_poly2("uv^2").coeffs == {(1, 2): 1}
    assert parse_poly2("u v (u + v)").coeffs == {(2, 1): 1, (1, 2): 1}


@pytest.mark.parametrize("src,pos", [
    ("t^-1", 2), ("t^1.5", 2), ("t + u", 4), ("2 $ t", 2), ("(t + 1", 6), ("", 0), ("t +", 3),
    ("t^t", 2),
])
def test_errors_carry_position(src, pos):
    with pytest.raises(ParseError) as info:
        parse_poly1(src)
    assert info.value.position == pos


def test_wrong_variable_for_bivariate():
    with pytest.raises(ParseError, match="unknown variable 't'"):
        parse_poly2("u + t")


def test_division_only_by_constants():
    with pytest.raises(ParseError, match="constants"):
        parse_poly1("1/t")
    with pytest.raises(ParseError, match="zero"):
        parse_poly1("t/0")
    assert parse_poly1("t/(1+1)").coeffs == {1: Fraction(1, 2)}


FACTORED = [
    "4 t (1 - t^2)^2 (1 - 14 t^2 + t^4)",
    "(1 + t^2)^5",
    "-(t - 1/3)^3 (2t + 5) / 7",
    "t - -t^2 * 3 - (t + 2)(t - 2)",
]


@pytest.mark.parametrize("src", FACTORED)
@given(x=ratios)
def test_expander_matches_direct_evaluation(src, x):
    assert eval1(parse_poly1(src), x) == evaluate(parse_expr(src, ("t",)), {"t": x})


@given(x=ratios, y=ratios)
def test_expander_matches_direct_evaluation_bivariate(x, y):
    src = "8uv(u^2 + 1)(v^2 - 1) - (u - v)^3/3"
    assert eval2(parse_poly2(src), x, y) == evaluate(parse_expr(src, "uv"), {"u": x, "v": y})


poly1s = st.dictionaries(st.integers(0, 12), ratios.filter(bool), max_size=6).map(Poly1)
poly2s = st.dictionaries(st.tuples(st.integers(0, 6), st.integers(0, 6)), ratios.filter(bool),
                         max_size=6).map(Poly2)


@given(poly1s)
def test_render_round_trip_1(p):
    assert parse_poly1(render(p)) == p


@given(poly2s)
def test_render_round_trip_2(p):
    assert parse_poly2(render(p)) == p


def test_render_text():
    assert render(Poly2({(3, 0): Fraction(-1, 3), (1, 0): 1, (1, 2): 1})) == "u + u*v^2 - 1/3*u^3"
    assert render(Poly1()) == "0"
