import random
from fractions import Fraction

import pytest

from lcthresh import engine
from lcthresh.errors import ValidationFailure
from lcthresh.newton import Facet
from lcthresh.parsing import parse_poly
from lcthresh.polynomials import Poly, ThresholdValue


def lct(text, **kw):
    return engine.lct_newton(parse_poly(text), **kw)


def test_golden_values():
    assert lct("x^2+y^3").value.as_fraction() == Fraction(5, 6)
    assert lct("x^2+y^3+z^7").value.as_fraction() == Fraction(41, 42)
    assert lct("x^2+y^3+z^7+w^43").value.as_fraction() == Fraction(1805, 1806)


def test_polygon_example():
    report = lct("y^7 + y^3*x^2 + y^3*x^5 + y*x^4 + x^6")
    assert report.value.as_fraction() == Fraction(2, 5)
    assert report.witness == Facet((1, 1), 5)
    assert report.exact


def test_zero_and_unit():
    assert engine.lct_newton(Poly.zero(2)).value.is_zero()
    assert lct("3").value.is_infinite()
    assert lct("1+x").value.is_infinite()
    assert lct("x+y").value.as_fraction() == 1
    assert lct("x*y").value.as_fraction() == 1


def test_cap_at_one():
    # sum of reciprocals 3/2 caps to 1
    assert lct("x^2+y^2+z^2").value.as_fraction() == 1


def test_witness_skippable():
    report = lct("x^2+y^3", with_witness=False)
    assert report.witness is None
    assert report.value.as_fraction() == Fraction(5, 6)


def test_degenerate_flag_downgrades_exactness():
    f = parse_poly("x^2+y^3", generic=False)
    report = engine.lct_newton(f)
    assert report.exact is False
    assert report.value.as_fraction() == Fraction(5, 6)


def test_witness_face_bound_equals_value():
    rng = random.Random(42)
    for _ in range(40):
        support = {(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(rng.randint(1, 4))}
        support = {p for p in support if any(p)}
        if not support:
            continue
        report = engine.lct_newton(Poly.from_support(2, support))
        assert report.witness is not None
        uncapped = Fraction(sum(report.witness.normal), report.witness.offset)
        assert report.value.as_fraction() == min(Fraction(1), uncapped)


def test_multiplicity_bounds():
    f = parse_poly("x^2*y + x*y^4")
    assert engine.multiplicity_bounds(f) == (Fraction(1, 3), Fraction(2, 3))
    assert engine.multiplicity_bounds(parse_poly("x^5+y^6")) == (Fraction(1, 5), Fraction(2, 5))
    # order 1 saturates the cap
    assert engine.multiplicity_bounds(parse_poly("x+y^2")) == (1, 1)
    with pytest.raises(ValueError):
        engine.multiplicity_bounds(Poly.zero(2))
    with pytest.raises(ValueError):
        engine.multiplicity_bounds(parse_poly("1+x"))


def test_report_carries_bounds():
    report = lct("x^2*y + x*y^4")
    assert report.bounds == (Fraction(1, 3), Fraction(2, 3))
    low, high = report.bounds
    assert low <= report.value.as_fraction() <= high


def test_report_rejects_escaped_bracket():
    with pytest.raises(ValidationFailure):
        engine.ThresholdReport(
            ThresholdValue.finite(Fraction(1, 2)),
            True,
            None,
            (Fraction(2, 3), Fraction(1)),
        )


def test_lct_univariate():
    assert engine.lct_univariate(parse_poly("x^3+x^5")).as_fraction() == Fraction(1, 3)
    assert engine.lct_univariate(Poly.zero(1)).is_zero()
    assert engine.lct_univariate(parse_poly("1+x")).is_infinite()
    with pytest.raises(ValueError):
        engine.lct_univariate(parse_poly("x+y"))


def test_lct_diagonal():
    assert engine.lct_diagonal([2, 3]).as_fraction() == Fraction(5, 6)
    assert engine.lct_diagonal([2, 3, 7]).as_fraction() == Fraction(41, 42)
    assert engine.lct_diagonal([1]).as_fraction() == 1
    assert engine.lct_diagonal([2, 2, 2]).as_fraction() == 1
    with pytest.raises(ValueError):
        engine.lct_diagonal([])
    with pytest.raises(ValueError):
        engine.lct_diagonal([2, 0])


def test_lct_diagonal_matches_newton():
    rng = random.Random(7)
    for _ in range(25):
        exps = [rng.randint(1, 9) for _ in range(rng.randint(1, 4))]
        support = []
        for i, a in enumerate(exps):
            point = [0] * len(exps)
            point[i] = a
            support.append(tuple(point))
        f = Poly.from_support(len(exps), support)
        assert engine.lct_newton(f, with_witness=False).value == engine.lct_diagonal(exps)


def test_lct_direct_sum_combinators():
    half = ThresholdValue.finite(Fraction(1, 2))
    third = ThresholdValue.finite(Fraction(1, 3))
    assert engine.lct_direct_sum(half, third).as_fraction() == Fraction(5, 6)
    assert engine.lct_direct_sum(half, half).as_fraction() == 1
    big = ThresholdValue.finite(Fraction(3, 4))
    assert engine.lct_direct_sum(big, big).as_fraction() == 1  # capped
    assert engine.lct_direct_sum(ThresholdValue.zero(), third) == third
    assert engine.lct_direct_sum(third, ThresholdValue.zero()) == third
    assert engine.lct_direct_sum(ThresholdValue.infinite(), third).is_infinite()
    assert engine.lct_direct_sum(ThresholdValue.zero(), ThresholdValue.zero()).is_zero()


def test_truncation_bound():
    assert engine.truncation_bound(2, 9) == Fraction(1, 5)
    assert engine.truncation_bound(3, 5) == Fraction(1, 2)
    n, m = 3, 4
    assert engine.truncation_bound(n, 2 * m + 1) == engine.truncation_bound(n, m) / 2
    with pytest.raises(ValueError):
        engine.truncation_bound(0, 3)
    with pytest.raises(ValueError):
        engine.truncation_bound(2, -1)


def test_subadditivity_examples():
    f = parse_poly("x^4", n_hint=2)
    g = parse_poly("y^4")
    check = engine.check_subadditivity(f, g)
    assert check.passed
    assert check.union_value.as_fraction() == Fraction(1, 2)
    assert check.f_value.as_fraction() == Fraction(1, 4)
    assert check.g_value.as_fraction() == Fraction(1, 4)

    check = engine.check_subadditivity(parse_poly("x^4", n_hint=2), parse_poly("x*y^2"))
    assert check.passed
    assert check.union_value.as_fraction() == Fraction(5, 8)

    f = parse_poly("x^2+y^3")
    same = engine.check_subadditivity(f, f)
    assert same.passed and same.union_value == same.f_value


def test_subadditivity_dimension_mismatch():
    with pytest.raises(ValueError):
        engine.check_subadditivity(parse_poly("x^2"), parse_poly("x^2+y^2"))


def test_subadditivity_random_supports():
    rng = random.Random(2718)
    for _ in range(40):
        supp_f = {(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(rng.randint(1, 3))}
        supp_g = {(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(rng.randint(1, 3))}
        supp_f = {p for p in supp_f if any(p)} or {(1, 0)}
        supp_g = {p for p in supp_g if any(p)} or {(0, 1)}
        check = engine.check_subadditivity(
            Poly.from_support(2, supp_f), Poly.from_support(2, supp_g)
        )
        assert check.passed


def test_restriction_examples():
    check = engine.check_restriction(parse_poly("x^2+y^3"), [0])
    assert check.passed
    assert check.restricted_value.as_fraction() == Fraction(1, 2)
    assert check.full_value.as_fraction() == Fraction(5, 6)

    check = engine.check_restriction(parse_poly("x^3+x*y^5"), [0])
    assert check.passed
    assert check.restricted_value.as_fraction() == Fraction(1, 3)
    assert check.full_value.as_fraction() == Fraction(7, 15)

    check = engine.check_restriction(parse_poly("x+y"), [0])
    assert check.passed
    assert check.restricted_value.as_fraction() == 1 == check.full_value.as_fraction()


def test_restriction_vanishing_rejected():
    with pytest.raises(ValueError):
        engine.check_restriction(parse_poly("x*y"), [0])


def test_restriction_random_supports():
    rng = random.Random(314)
    for _ in range(40):
        support = {(rng.randint(0, 6), rng.randint(0, 6), rng.randint(0, 6))
                   for _ in range(rng.randint(2, 5))}
        support = {p for p in support if any(p)}
        keep = sorted(rng.sample(range(3), rng.randint(1, 3)))
        f = Poly.from_support(3, support or {(1, 1, 1)})
        if f.restrict_to_axes(keep).is_zero():
            continue
        assert engine.check_restriction(f, keep).passed
