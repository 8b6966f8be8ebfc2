from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lcthresh.errors import PolyParseError
from lcthresh.parsing import parse_poly, poly_to_string, variable_names
from lcthresh.polynomials import Poly


def test_basic_support():
    f = parse_poly("x^2 + y^3")
    assert f.dimension == 2
    assert f.support() == {(2, 0), (0, 3)}
    assert all(c == 1 for c in f.terms.values())


def test_polygon_example_support():
    f = parse_poly("y^7 + y^3*x^2 + y^3*x^5 + y*x^4 + x^6")
    assert f.support() == {(0, 7), (2, 3), (5, 3), (4, 1), (6, 0)}


def test_indexed_variables_and_hint():
    f = parse_poly("3/2*x1^2*x3", n_hint=3)
    assert f.dimension == 3
    assert f.terms == {(2, 0, 1): Fraction(3, 2)}


def test_letter_names_map_to_first_four_axes():
    f = parse_poly("x + y + z + w")
    assert f.dimension == 4
    assert f.support() == {(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)}


def test_multi_digit_index():
    f = parse_poly("x10^2")
    assert f.dimension == 10
    assert f.support() == {(0,) * 9 + (2,)}


def test_coefficients_and_signs():
    f = parse_poly("-x^2 + 2*y - 1/3")
    assert f.terms[(2, 0)] == -1
    assert f.terms[(0, 1)] == 2
    assert f.terms[(0, 0)] == Fraction(-1, 3)


def test_repeated_variable_exponents_add():
    f = parse_poly("x*x*x")
    assert f.support() == {(3,)}


def test_like_terms_cancel():
    f = parse_poly("x^2 - x^2 + y")
    assert f.support() == {(0, 1)}
    assert parse_poly("x - x").is_zero()


def test_bare_constant_and_zero():
    assert parse_poly("7").terms == {(0,): Fraction(7)}
    assert parse_poly("0").is_zero()


def test_n_hint_must_cover_used_variables():
    with pytest.raises(PolyParseError, match="dimension"):
        parse_poly("z^2", n_hint=2)
    f = parse_poly("x^2", n_hint=4)
    assert f.dimension == 4 and f.support() == {(2, 0, 0, 0)}


def test_error_positions():
    with pytest.raises(PolyParseError) as err:
        parse_poly("x^-2")
    assert err.value.position == 2
    with pytest.raises(PolyParseError) as err:
        parse_poly("1/0*x")
    assert err.value.position == 2
    with pytest.raises(PolyParseError) as err:
        parse_poly("x + ")
    assert err.value.position == 4
    with pytest.raises(PolyParseError) as err:
        parse_poly("x$y")
    assert err.value.position == 1


def test_unknown_variable():
    with pytest.raises(PolyParseError, match="unknown variable"):
        parse_poly("b^2")
    with pytest.raises(PolyParseError, match="x1"):
        parse_poly("x0")


def test_empty_input():
    with pytest.raises(PolyParseError):
        parse_poly("")
    with pytest.raises(PolyParseError):
        parse_poly("   ")


def test_variable_names():
    assert variable_names(2) == ["x", "y"]
    assert variable_names(4) == ["x", "y", "z", "w"]
    assert variable_names(5) == ["x1", "x2", "x3", "x4", "x5"]


def test_poly_to_string_golden():
    assert poly_to_string(Poly.zero(2)) == "0"
    f = parse_poly("y^3 + x^2")
    assert poly_to_string(f) == "x^2 + y^3"
    g = parse_poly("-x + 1/2*y^2")
    assert poly_to_string(g) == "-x + 1/2*y^2"


def test_round_trip_examples():
    for text in ["x^2 + y^3", "3/2*x1^2*x3", "x*y^2 - 7/5*x^4", "y^7 + y^3*x^2 + x^6"]:
        f = parse_poly(text)
        assert parse_poly(poly_to_string(f), n_hint=f.dimension) == f


coefficients = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=20
).filter(lambda q: q != 0)


@st.composite
def random_polys(draw):
    dimension = draw(st.integers(1, 5))
    n_terms = draw(st.integers(0, 7))
    terms = {}
    for _ in range(n_terms):
        e = tuple(draw(st.integers(0, 9)) for _ in range(dimension))
        terms[e] = draw(coefficients)
    return Poly.from_terms(dimension, terms)


@given(random_polys())
def test_round_trip_property(f):
    assert parse_poly(poly_to_string(f), n_hint=f.dimension) == f
