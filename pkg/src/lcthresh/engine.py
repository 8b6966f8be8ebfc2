"""Threshold computation and the small calculus around it.

The Newton threshold of f with f(0) = 0, f != 0 is min(1, 1/t*) where
t* is the diagonal parameter of the support.  The cap at 1 happens here
and only here; t* and the per-face bounds stay uncapped.  Whether the
value is the exact threshold or only an upper bound is decided solely
by the polynomial's generic-coefficients flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from . import newton
from .errors import ValidationFailure
from .polynomials import Poly, ThresholdValue


@dataclass(frozen=True)
class ThresholdReport:
    """Threshold value plus provenance: exactness label, deciding facet,
    and the multiplicity bracket (lower, upper) when defined."""

    value: ThresholdValue
    exact: bool
    witness: Optional[newton.Facet]
    bounds: Optional[Tuple[Fraction, Fraction]]

    def __post_init__(self) -> None:
        if self.value.is_finite() and self.exact and self.bounds is not None:
            low, high = self.bounds
            if not (low <= self.value.as_fraction() <= high):
                raise ValidationFailure(
                    f"threshold {self.value} escapes its multiplicity bracket [{low}, {high}]"
                )


def multiplicity_bounds(f: Poly) -> Tuple[Fraction, Fraction]:
    """(1/mult, min(1, n/mult)) bracketing the threshold."""
    if f.is_zero():
        raise ValueError("zero polynomial has no multiplicity bracket")
    if f.constant_term() != 0:
        raise ValueError("f(0) != 0 puts the threshold outside the bracket")
    mult = f.order()
    assert mult is not None and mult >= 1
    return Fraction(1, mult), min(Fraction(1), Fraction(f.dimension, mult))


def lct_newton(f: Poly, with_witness: bool = True) -> ThresholdReport:
    """Newton threshold report for f.

    Zero polynomial -> Zero; f(0) != 0 -> Infinite; otherwise Finite
    min(1, 1/t*).  The witness is the deciding facet (lexicographically
    smallest primitive normal among ties); pass with_witness=False in
    bulk scans where only the value matters.
    """
    if f.is_zero():
        return ThresholdReport(ThresholdValue.zero(), True, None, None)
    if f.constant_term() != 0:
        return ThresholdReport(ThresholdValue.infinite(), True, None, None)
    support = f.support()
    tstar = newton.diagonal_parameter(support)
    if tstar <= 0:
        raise ValidationFailure(f"positive diagonal parameter expected, got {tstar}")
    value = ThresholdValue.finite(min(Fraction(1), 1 / tstar))
    witness = None
    if with_witness and f.dimension <= newton.DEFAULT_DIMENSION_CAP:
        deciders = newton.diagonal_facets(support, tstar)
        if deciders:
            witness = deciders[0]
    return ThresholdReport(value, f.generic, witness, multiplicity_bounds(f))


def lct_univariate(f: Poly) -> ThresholdValue:
    """One variable: the threshold is 1/mult exactly, coefficients irrelevant."""
    if f.dimension != 1:
        raise ValueError("lct_univariate needs a one-variable polynomial")
    if f.is_zero():
        return ThresholdValue.zero()
    if f.constant_term() != 0:
        return ThresholdValue.infinite()
    mult = f.order()
    assert mult is not None
    return ThresholdValue.finite(Fraction(1, mult))


def lct_diagonal(exponents: Sequence[int]) -> ThresholdValue:
    """Threshold of z_1^{a_1} + ... + z_n^{a_n}: min(1, sum 1/a_i)."""
    if not exponents:
        raise ValueError("need at least one exponent")
    if any(not isinstance(a, int) or a < 1 for a in exponents):
        raise ValueError("diagonal exponents must be integers >= 1")
    total = sum(Fraction(1, a) for a in exponents)
    return ThresholdValue.finite(min(Fraction(1), total))


def lct_direct_sum(cf: ThresholdValue, cg: ThresholdValue) -> ThresholdValue:
    """Threshold of f(x) + g(y) from the two summands' thresholds."""
    if cf.is_infinite() or cg.is_infinite():
        return ThresholdValue.infinite()
    if cf.is_zero():
        return cg
    if cg.is_zero():
        return cf
    return ThresholdValue.finite(min(Fraction(1), cf.as_fraction() + cg.as_fraction()))


def truncation_bound(dimension: int, m: int) -> Fraction:
    """How far a degree-m truncation can move the threshold: n/(m+1)."""
    if dimension < 1:
        raise ValueError("dimension must be at least 1")
    if m < 0:
        raise ValueError("truncation degree must be nonnegative")
    return Fraction(dimension, m + 1)


def _newton_value(f: Poly) -> ThresholdValue:
    return lct_newton(f, with_witness=False).value


def _union_support(f: Poly, g: Poly) -> Poly:
    return Poly.from_support(f.dimension, set(f.support()) | set(g.support()))


@dataclass(frozen=True)
class SubadditivityCheck:
    union_value: ThresholdValue
    f_value: ThresholdValue
    g_value: ThresholdValue
    passed: bool


def check_subadditivity(f: Poly, g: Poly) -> SubadditivityCheck:
    """Validate N(supp f + supp g together) <= min(1, N(f) + N(g)).

    A failure aborts: the inequality is a theorem for the quantities
    computed here, so a violation means the implementation is wrong.
    """
    if f.dimension != g.dimension:
        raise ValueError("subadditivity check needs matching dimensions")
    nf = _newton_value(f)
    ng = _newton_value(g)
    if f.is_zero() or g.is_zero():
        nu = _newton_value(g if f.is_zero() else f)
    else:
        nu = _newton_value(_union_support(f, g))
    if nf.is_infinite() or ng.is_infinite() or nu.is_infinite():
        # The union support contains the origin iff one summand does.
        passed = nu.is_infinite()
    else:
        bound = min(Fraction(1), nf.as_fraction() + ng.as_fraction())
        passed = nu.as_fraction() <= bound
    report = SubadditivityCheck(nu, nf, ng, passed)
    if not passed:
        raise ValidationFailure(
            f"subadditivity violated: N(union) = {nu}, N(f) = {nf}, N(g) = {ng}"
        )
    return report


@dataclass(frozen=True)
class RestrictionCheck:
    restricted_value: ThresholdValue
    full_value: ThresholdValue
    keep: Tuple[int, ...]
    passed: bool


def check_restriction(f: Poly, keep: Sequence[int]) -> RestrictionCheck:
    """Record whether N(f restricted to the kept axes) <= N(f).

    Violations are recorded, not raised: with degenerate coefficients
    the Newton value is only an upper bound for the true threshold, so a
    recorded failure is a flag for inspection rather than a bug proof.
    """
    restricted = f.restrict_to_axes(keep)
    if restricted.is_zero():
        raise ValueError("restriction vanishes; pick axes meeting the support")
    nl = _newton_value(restricted)
    nf = _newton_value(f)
    if nf.is_infinite():
        passed = True
    elif nl.is_infinite():
        passed = False
    else:
        passed = nl.as_fraction() <= nf.as_fraction()
    return RestrictionCheck(nl, nf, tuple(keep), passed)
