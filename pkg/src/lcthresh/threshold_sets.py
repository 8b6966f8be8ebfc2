"""Threshold sets in low dimension: enumeration, sampling, and the gap search.

One variable is classical: HT_1 = {0} union {1/k}.  Two variables carry
an explicit parametrization: every positive value is

    (c1 + c2) / (c1*c2 + a1*c2 + a2*c1)

over nonnegative integers with a_i + c_i >= max(2, a_{3-i}); the
enumerator walks that parameter box exactly.  Near 1 the values thin
out: the largest below 1 is 1 - eps_n where eps_n = 1/(c_{n+1} - 1) for
the Sylvester sequence c_1 = 2, c_{k+1} = c_1...c_k + 1, and gap_search
recovers that optimum by complete branch and bound over sums of unit
fractions below 1.

Enumerations run on int64 arrays (numerators <= 2B and denominators
<= 3B^2 leave huge headroom), so everything stays exact; Fractions are
materialized lazily because large bounds produce millions of values.
"""

from __future__ import annotations

import math
import random
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .engine import lct_direct_sum, lct_newton
from .errors import ResourceCapExceeded
from .polynomials import Poly, ThresholdValue

DEFAULT_GAP_CAP = 5


class RationalValues(Sequence):
    """Sorted, duplicate-free rationals as parallel int64 arrays.

    Indexing materializes exact Fractions on demand; the arrays are
    already in lowest terms, strictly increasing by value.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, numerators: np.ndarray, denominators: np.ndarray) -> None:
        self._num = numerators
        self._den = denominators

    @staticmethod
    def from_fractions(values: Iterable) -> "RationalValues":
        ordered = sorted(set(Fraction(v) for v in values))
        num = np.array([v.numerator for v in ordered], dtype=np.int64)
        den = np.array([v.denominator for v in ordered], dtype=np.int64)
        return RationalValues(num, den)

    def __len__(self) -> int:
        return len(self._num)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return [Fraction(int(n), int(d))
                    for n, d in zip(self._num[index], self._den[index])]
        return Fraction(int(self._num[index]), int(self._den[index]))

    def __iter__(self):
        for n, d in zip(self._num, self._den):
            yield Fraction(int(n), int(d))

    def __contains__(self, value) -> bool:
        q = Fraction(value)
        i = bisect_left(self, q)
        return i < len(self) and self[i] == q

    def __eq__(self, other) -> bool:
        if not isinstance(other, Sequence):
            return NotImplemented
        return len(self) == len(other) and all(a == b for a, b in zip(self, other))

    def count_in_open(self, lower, upper) -> int:
        """How many stored values lie strictly between lower and upper."""
        return bisect_left(self, Fraction(upper)) - bisect_right(self, Fraction(lower))

    def floats(self) -> np.ndarray:
        return self._num / self._den

    def integer_pairs(self) -> Tuple[np.ndarray, np.ndarray]:
        return self._num, self._den


@dataclass(frozen=True)
class ThresholdSetSample:
    dimension: int
    values: RationalValues
    provenance: Dict[str, object]

    def __post_init__(self) -> None:
        if len(self.values) and not (0 <= self.values[0] and self.values[-1] <= 1):
            raise ValueError("threshold values must lie in [0, 1]")


def ht1(max_k: int) -> ThresholdSetSample:
    """{0} union {1/k : 1 <= k <= max_k}, the complete one-variable set
    truncated at its smallest positive element 1/max_k."""
    if max_k < 1:
        raise ValueError("max_k must be at least 1")
    num = np.array([0] + [1] * max_k, dtype=np.int64)
    den = np.array([1] + list(range(max_k, 0, -1)), dtype=np.int64)
    return ThresholdSetSample(1, RationalValues(num, den), {"source": "ht1", "max_k": max_k})


def _ht2_reference(bound: int) -> set:
    """Naive four-loop enumerator, kept as the slow cross-check route."""
    values = {Fraction(0)}
    for a1 in range(bound + 1):
        for c1 in range(bound + 1):
            for a2 in range(bound + 1):
                if a1 + c1 < max(2, a2):
                    continue
                for c2 in range(bound + 1):
                    if a2 + c2 < max(2, a1):
                        continue
                    den = c1 * c2 + a1 * c2 + a2 * c1
                    if den <= 0:
                        continue
                    values.add(Fraction(c1 + c2, den))
    return values


def ht2_enumerate(bound: int, chunk: int = 16) -> ThresholdSetSample:
    """All two-variable threshold values with parameters up to `bound`.

    Walks (a1, c1, a2, c2) in [0, bound]^4 under the side condition
    a_i + c_i >= max(2, a_{3-i}), using the swap symmetry of the index
    pairs to halve the work; skipped tuples (denominator <= 0, only
    c1 = c2 = 0 with a1 = a2 >= 2 can occur) are counted at full-domain
    multiplicity.  Exact int64 arithmetic throughout.
    """
    if bound < 2:
        raise ValueError("bound must be at least 2")
    size = bound + 1
    max_num = 2 * bound
    max_den = 3 * bound * bound
    pack_width = max_den + 1
    seen = np.zeros((max_num + 1) * pack_width, dtype=bool)
    grid = np.arange(size, dtype=np.int64)
    A1 = grid[None, :, None]
    A2 = grid[None, None, :]
    needs1 = np.maximum(2, A2)   # lower bound for a1 + c1
    needs2 = np.maximum(2, A1)   # lower bound for a2 + c2
    skipped = 0
    for c1 in range(size):
        for lo in range(c1, size, chunk):
            c2s = grid[lo:min(lo + chunk, size)][:, None, None]
            cond = (A1 + c1 >= needs1) & (A2 + c2s >= needs2)
            den = c1 * c2s + A1 * c2s + A2 * c1
            keep = cond & (den > 0)
            seen[((c1 + c2s) * pack_width + den)[keep]] = True
            dropped = cond & (den == 0)
            if dropped.any():
                per_c2 = dropped.sum(axis=(1, 2))
                for offset, cnt in enumerate(per_c2):
                    weight = 1 if lo + offset == c1 else 2
                    skipped += weight * int(cnt)
    packed = np.flatnonzero(seen)
    num = packed // pack_width
    den = packed % pack_width
    g = np.gcd(num, den)
    packed = np.unique((num // g) * pack_width + den // g)
    num = packed // pack_width
    den = packed % pack_width
    order = np.argsort(num / den)  # exact: reduced pairs differ by > float error
    num = np.concatenate([[0], num[order]])
    den = np.concatenate([[1], den[order]])
    provenance = {
        "source": "ht2",
        "bound": bound,
        "skipped_nonpositive_denominator": skipped,
    }
    return ThresholdSetSample(2, RationalValues(num, den), provenance)


def toric_sample(
    dimension: int,
    max_degree: int,
    count: int,
    seed: int,
) -> ThresholdSetSample:
    """Thresholds of `count` random supports: a deterministic, seeded
    subset generator for HT_n, no exhaustiveness claimed."""
    if dimension < 1 or max_degree < 1 or count < 1:
        raise ValueError("dimension, max_degree, and count must be positive")
    rng = random.Random(seed)
    available = (max_degree + 1) ** dimension - 1  # exponent box minus the origin
    found = set()
    for _ in range(count):
        n_points = min(rng.randint(1, 2 * dimension + 2), available)
        points = set()
        while len(points) < n_points:
            p = tuple(rng.randint(0, max_degree) for _ in range(dimension))
            if any(p):
                points.add(p)
        f = Poly.from_support(dimension, points)
        found.add(lct_newton(f, with_witness=False).value.as_fraction())
    provenance = {
        "source": "toric",
        "dimension": dimension,
        "max_degree": max_degree,
        "count": count,
        "seed": seed,
    }
    return ThresholdSetSample(dimension, RationalValues.from_fractions(found), provenance)


@dataclass(frozen=True)
class AccumulationInterval:
    lower: Fraction
    upper: Fraction
    count: int


def accumulation_scan(
    sample: "ThresholdSetSample | RationalValues | Sequence",
    delta: Fraction,
    k: int,
) -> List[AccumulationInterval]:
    """Clusters of the sample: maximal merges of windows that hold at
    least k elements within delta of their anchor element.

    Deterministic sweep; windows are index ranges [i, j] with
    S[j] <= S[i] + delta, merged when they share elements.
    """
    delta = Fraction(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    if k < 2:
        raise ValueError("k must be at least 2")
    if isinstance(sample, ThresholdSetSample):
        values = sample.values
    elif isinstance(sample, RationalValues):
        values = sample
    else:
        values = RationalValues.from_fractions(sample)
    n = len(values)
    if n == 0:
        return []
    num, den = values.integer_pairs()
    dmax = int(den.max()) if n else 1
    if dmax * dmax * delta.denominator < 4.7e13:
        floats = values.floats()
        # Pad past float error but far under the smallest exact margin.
        cutoffs = floats + (float(delta) + 1e-14)
        ends = np.searchsorted(floats, cutoffs, side="right") - 1
    else:
        ends = np.empty(n, dtype=np.int64)
        j = 0
        for i in range(n):
            j = max(j, i)
            limit = values[i] + delta
            while j + 1 < n and values[j + 1] <= limit:
                j += 1
            ends[i] = j
    idx = np.arange(n)
    qualifying = np.flatnonzero(ends - idx + 1 >= k)
    if len(qualifying) == 0:
        return []
    # chain only windows that share elements; index-adjacent but disjoint
    # windows sit across a gap wider than delta and stay separate
    breaks = qualifying[1:] > ends[qualifying[:-1]]
    starts = qualifying[np.concatenate([[True], breaks])]
    lasts = qualifying[np.concatenate([breaks, [True]])]
    intervals = []
    for s, lq in zip(starts, lasts):
        e = int(ends[lq])
        intervals.append(AccumulationInterval(values[int(s)], values[e], e - int(s) + 1))
    return intervals


@dataclass(frozen=True)
class FamilyCheck:
    """Record of verifying the one-parameter family c + 1/m against the
    direct-sum rule on [m_first, m_last]."""

    value: Fraction
    m_first: int
    m_last: int
    values: Tuple[Fraction, ...]
    empty: bool
    passed: bool


def family_limit_check(c, max_m: int) -> FamilyCheck:
    """Verify lct_direct_sum(c, 1/m) = c + 1/m exactly for every valid m
    up to max_m, and that the values strictly decrease toward c."""
    c = Fraction(c)
    if not 0 < c < 1:
        raise ValueError("family base value must lie strictly between 0 and 1")
    m_first = math.ceil(1 / (1 - c)) + 1
    if m_first > max_m:
        return FamilyCheck(c, m_first, max_m, (), empty=True, passed=False)
    observed: List[Fraction] = []
    ok = True
    for m in range(m_first, max_m + 1):
        got = lct_direct_sum(ThresholdValue.finite(c), ThresholdValue.finite(Fraction(1, m)))
        expected = c + Fraction(1, m)
        if not (got.is_finite() and got.as_fraction() == expected):
            ok = False
        observed.append(got.as_fraction() if got.is_finite() else Fraction(0))
    decreasing = all(a > b for a, b in zip(observed, observed[1:]))
    above = all(v > c for v in observed)
    return FamilyCheck(c, m_first, max_m, tuple(observed), empty=False,
                       passed=ok and decreasing and above)


@dataclass(frozen=True)
class GapResult:
    n: int
    maximum: Fraction
    witness: Tuple[int, ...]


def gap_search(n: int, max_n: int = DEFAULT_GAP_CAP) -> GapResult:
    """Exact maximum of 1/a_1 + ... + 1/a_n < 1 over integers
    a_1 <= ... <= a_n, by complete branch and bound.

    Children are explored in ascending a, so the first leaf is the
    greedy (Sylvester) tuple; later ties never replace it, making the
    witness the lexicographically smallest maximizer.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > max_n:
        raise ResourceCapExceeded(f"gap search capped at n = {max_n}, got {n}")
    best_sum: Optional[Fraction] = None
    best_tuple: Tuple[int, ...] = ()

    def descend(prefix: Tuple[int, ...], total: Fraction, amin: int) -> None:
        nonlocal best_sum, best_tuple
        remaining = n - len(prefix)
        gap = 1 - total
        a = max(amin, gap.denominator // gap.numerator + 1)  # smallest a with 1/a < gap
        if remaining == 1:
            leaf = total + Fraction(1, a)
            if best_sum is None or leaf > best_sum:
                best_sum, best_tuple = leaf, prefix + (a,)
            return
        while best_sum is None or total + Fraction(remaining, a) > best_sum:
            descend(prefix + (a,), total + Fraction(1, a), a)
            a += 1

    descend((), Fraction(0), 2)
    assert best_sum is not None
    return GapResult(n, best_sum, best_tuple)


def sylvester_sequence(k: int) -> Tuple[int, ...]:
    """First k terms of 2, 3, 7, 43, ...: c_{j+1} = c_j^2 - c_j + 1."""
    if k < 1:
        raise ValueError("k must be at least 1")
    terms = [2]
    while len(terms) < k:
        c = terms[-1]
        terms.append(c * c - c + 1)
    return tuple(terms)


def epsilon_candidate(n: int) -> Fraction:
    """Conjectured width of the empty interval (1 - eps_n, 1) in HT_n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Fraction(1, sylvester_sequence(n + 1)[-1] - 1)
