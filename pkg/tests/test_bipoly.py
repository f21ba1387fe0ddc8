from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from tuttespan.bipoly import CURVE, ONE, X, Y, ZERO, BiPoly, parse_poly
from tuttespan.tutte import tutte_freedom, tutte_uniform

x, y = sympy.symbols("x y")

coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=6)
polys = st.dictionaries(st.tuples(st.integers(0, 5), st.integers(0, 5)), coeffs, max_size=8).map(BiPoly)


def to_sympy(p):
    return sympy.expand(sum((sympy.Rational(c.numerator, c.denominator) * x**i * y**j for (i, j), c in p.items()), sympy.Integer(0)))


@given(polys, polys, polys)
def test_ring_axioms(p, q, s):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + s == p + (q + s)
    assert (p * q) * s == p * (q * s)
    assert p * (q + s) == p * q + p * s
    assert p - p == ZERO
    assert p * ONE == p


@given(polys, polys)
def test_arithmetic_matches_sympy(p, q):
    assert to_sympy(p * q) == sympy.expand(to_sympy(p) * to_sympy(q))
    assert to_sympy(p - q) == sympy.expand(to_sympy(p) - to_sympy(q))


@given(polys, st.integers(-3, 3), st.integers(-3, 3))
def test_eval_matches_sympy(p, a, b):
    assert p.eval(a, b) == to_sympy(p).subs({x: a, y: b})


def test_examples():
    assert (X + Y) - (X + Y) == ZERO
    assert CURVE * ONE == CURVE
    assert CURVE * parse_poly("x^3 + 5x^2 + 15x + 35") == tutte_uniform(4, 5) - Y * tutte_uniform(4, 4)
    assert (X + Y).eval(2, 2) == 4
    assert ZERO.eval(7, -1) == 0
    assert parse_poly("x^2y").eval(3, 2) == 18
    assert tutte_freedom("11100").coeff(1, 0) == 3
    assert tutte_freedom("00111").coeff(3, 2) == 1
    assert ZERO.coeff(5, 5) == 0


def test_divide_by_curve_examples():
    assert (tutte_freedom("11100") - tutte_freedom("11010")).divide_by_curve() == ONE
    assert (X + Y).divide_by_curve() is None
    assert ZERO.divide_by_curve() == ZERO


@given(polys)
def test_divide_by_curve_round_trip(q):
    assert (CURVE * q).divide_by_curve() == q


@given(polys)
def test_divide_by_curve_agrees_with_sympy(p):
    # p is a multiple of the curve iff sympy's remainder modulo it is zero
    got = p.divide_by_curve()
    rem = sympy.reduced(to_sympy(p), [x + y - x * y], x, y)[1]
    assert (got is not None) == (rem == 0)
    if got is not None:
        assert sympy.expand(to_sympy(got) * (x + y - x * y)) == to_sympy(p)


@given(polys, polys)
def test_divide_by_curve_on_perturbed_multiples(q, e):
    p = CURVE * q + e
    got = p.divide_by_curve()
    assert (got is not None) == (e.divide_by_curve() is not None)


def test_text_examples():
    assert tutte_freedom("11010").to_text() == "x^3 + 2x^2 + 2x + xy + 2y + y^2"
    assert ZERO.to_text() == "0"
    assert CURVE.to_text() == "x - xy + y"
    assert BiPoly({(1, 0): Fraction(1, 2), (0, 1): Fraction(1, 2)}).to_text() == "(1/2)x + (1/2)y"
    assert BiPoly({(0, 0): -3}).to_text() == "-3"


@given(polys)
def test_text_round_trip(p):
    assert parse_poly(p.to_text()) == p


@given(polys)
def test_json_round_trip(p):
    assert BiPoly.from_json(p.to_json()) == p


def test_parse_variants():
    assert parse_poly("yx^3 + y^2x^2") == parse_poly("x^3y + x^2y^2")
    assert parse_poly("3/4*x*y - 2") == BiPoly({(1, 1): Fraction(3, 4), (0, 0): -2})
    for bad in ("", "x +", "2x ^", "z", "x y ++ 1"):
        with pytest.raises(ValueError):
            parse_poly(bad)


def test_hash_and_equality():
    assert hash(parse_poly("x + y")) == hash(X + Y)
    assert X + Y == tutte_freedom("10")
    assert {X + Y: 1}[tutte_uniform(1, 1)] == 1
