"""Sparse polynomials over Q with exact rational coefficients.

A polynomial in n variables is stored as a map from exponent vectors
(length-n tuples of nonnegative ints) to nonzero Fraction coefficients.
The zero polynomial is the empty map.  Everything downstream only looks
at the support, so coefficients exist mainly to round-trip through the
parser and to decide whether the constant term is present.

The `generic` flag records the caller's assertion that the coefficients
are general enough for the Newton polyhedron to determine the threshold
exactly.  There is no nondegeneracy test; the flag only selects between
the Exact and UpperBound labels on reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

Exponent = Tuple[int, ...]


def total_degree(exponent: Exponent) -> int:
    return sum(exponent)


def _check_exponent(exponent: Sequence[int], dimension: int) -> Exponent:
    e = tuple(exponent)
    if len(e) != dimension:
        raise ValueError(f"exponent {e} has length {len(e)}, expected {dimension}")
    for part in e:
        if not isinstance(part, int) or isinstance(part, bool) or part < 0:
            raise ValueError(f"exponent {e} must have nonnegative integer entries")
    return e


@dataclass(frozen=True, eq=True)
class Poly:
    """Immutable sparse polynomial.  Do not mutate `terms` after construction."""

    dimension: int
    terms: Dict[Exponent, Fraction]
    generic: bool = True

    @staticmethod
    def from_terms(
        dimension: int,
        terms: Mapping[Sequence[int], object],
        generic: bool = True,
    ) -> "Poly":
        if dimension < 1:
            raise ValueError("dimension must be at least 1")
        canonical: Dict[Exponent, Fraction] = {}
        for exponent, coefficient in terms.items():
            e = _check_exponent(exponent, dimension)
            c = Fraction(coefficient)
            if c == 0:
                continue
            total = canonical.get(e, Fraction(0)) + c
            if total == 0:
                canonical.pop(e, None)
            else:
                canonical[e] = total
        return Poly(dimension, canonical, generic)

    @staticmethod
    def zero(dimension: int, generic: bool = True) -> "Poly":
        return Poly.from_terms(dimension, {}, generic)

    @staticmethod
    def from_support(
        dimension: int,
        exponents: Iterable[Sequence[int]],
        generic: bool = True,
    ) -> "Poly":
        """Polynomial with coefficient 1 on each given exponent."""
        return Poly.from_terms(dimension, {tuple(e): 1 for e in exponents}, generic)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> frozenset:
        return frozenset(self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.dimension, Fraction(0))

    def order(self) -> Optional[int]:
        """Minimal total degree of a term; None stands for +infinity (f = 0)."""
        if not self.terms:
            return None
        return min(total_degree(e) for e in self.terms)

    def max_total_degree(self) -> Optional[int]:
        if not self.terms:
            return None
        return max(total_degree(e) for e in self.terms)

    def truncate(self, m: int) -> "Poly":
        """Keep the terms of total degree <= m."""
        if m < 0:
            raise ValueError("truncation degree must be nonnegative")
        kept = {e: c for e, c in self.terms.items() if total_degree(e) <= m}
        return Poly(self.dimension, kept, self.generic)

    def direct_sum(self, other: "Poly") -> "Poly":
        """f(x) + g(y) on disjoint variable blocks; dimensions add.

        Exponents only collide at the origin (constant terms), where the
        coefficients add and may cancel.
        """
        n, m = self.dimension, other.dimension
        combined: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            combined[e + (0,) * m] = c
        for e, c in other.terms.items():
            key = (0,) * n + e
            total = combined.get(key, Fraction(0)) + c
            if total == 0:
                combined.pop(key, None)
            else:
                combined[key] = total
        return Poly(n + m, combined, self.generic and other.generic)

    def restrict_to_axes(self, keep: Sequence[int]) -> "Poly":
        """Set the variables outside `keep` to zero and reindex onto `keep`.

        `keep` holds 0-based coordinate indices, strictly increasing, nonempty.
        """
        axes = tuple(keep)
        if not axes:
            raise ValueError("keep must name at least one axis")
        if any(not isinstance(i, int) or i < 0 or i >= self.dimension for i in axes):
            raise ValueError(f"keep {axes} out of range for dimension {self.dimension}")
        if any(b <= a for a, b in zip(axes, axes[1:])):
            raise ValueError("keep must be strictly increasing")
        dropped = [i for i in range(self.dimension) if i not in axes]
        restricted: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            if any(e[i] != 0 for i in dropped):
                continue
            restricted[tuple(e[i] for i in axes)] = c
        return Poly(len(axes), restricted, self.generic)


_THRESHOLD_KINDS = ("zero", "finite", "infinite")


@dataclass(frozen=True)
class ThresholdValue:
    """Tagged threshold: Zero (f = 0), Finite (rational in (0, 1]), or Infinite (f(0) != 0)."""

    kind: str
    value: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.kind not in _THRESHOLD_KINDS:
            raise ValueError(f"unknown threshold kind {self.kind!r}")
        if self.kind == "finite":
            if self.value is None or not (0 < self.value <= 1):
                raise ValueError(f"finite threshold must lie in (0, 1], got {self.value}")
        elif self.value is not None:
            raise ValueError(f"{self.kind} threshold carries no rational value")

    @staticmethod
    def zero() -> "ThresholdValue":
        return ThresholdValue("zero")

    @staticmethod
    def finite(value) -> "ThresholdValue":
        return ThresholdValue("finite", Fraction(value))

    @staticmethod
    def infinite() -> "ThresholdValue":
        return ThresholdValue("infinite")

    def is_zero(self) -> bool:
        return self.kind == "zero"

    def is_finite(self) -> bool:
        return self.kind == "finite"

    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    def as_fraction(self) -> Fraction:
        """Numeric view where it exists: Zero -> 0, Finite -> value; Infinite raises."""
        if self.kind == "zero":
            return Fraction(0)
        if self.kind == "finite":
            assert self.value is not None
            return self.value
        raise ValueError("infinite threshold has no rational value")

    def __str__(self) -> str:
        if self.kind == "zero":
            return "0"
        if self.kind == "infinite":
            return "infinite"
        return str(self.value)
