"""Newton polyhedron geometry for a monomial support set.

For a support S in Z_{>=0}^n the polyhedron is P = conv(S) + R_{>=0}^n.
Everything the threshold needs reduces to two questions about P: does a
given rational point lie in it, and where does the diagonal ray
(t, ..., t) first enter it (the diagonal parameter t*).

Two deliberately independent routes are kept:

  * the LP route: membership and t* via the exact simplex; works in any
    dimension and is the unconditional path,
  * the facet route: the full inequality description of P, found by
    exhaustive rank-n subset search over the homogenized generators
    (support points at height 1, the n recession rays at height 0);
    capped by dimension because the subset count grows quickly.

Facet inequalities a.x >= d always have a >= 0 componentwise (the
recession cone contains every coordinate ray).  Facets with d = 0 are
exactly the coordinate hyperplanes x_i >= 0 and are excluded from the
reported list; membership via facets therefore also checks p >= 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from . import exact_lp
from .errors import ResourceCapExceeded
from .polynomials import Exponent

DEFAULT_DIMENSION_CAP = 8


@dataclass(frozen=True)
class Facet:
    """Facet-defining inequality normal.x >= offset with primitive normal >= 0."""

    normal: Tuple[int, ...]
    offset: int

    def __post_init__(self) -> None:
        if not self.normal or all(a == 0 for a in self.normal):
            raise ValueError("facet normal must be nonzero")
        if any(not isinstance(a, int) or a < 0 for a in self.normal):
            raise ValueError("facet normal must have nonnegative integer entries")
        g = 0
        for a in self.normal:
            g = gcd(g, a)
        if g != 1:
            raise ValueError(f"facet normal {self.normal} is not primitive")
        if not isinstance(self.offset, int) or self.offset < 0:
            raise ValueError("facet offset must be a nonnegative integer")

    @property
    def compact(self) -> bool:
        """The face is bounded iff the normal is strictly positive."""
        return all(a > 0 for a in self.normal)


def face_bound(facet: Facet) -> Fraction:
    """Threshold upper bound sum(a_i)/d read off one face."""
    if facet.offset == 0:
        raise ValueError("face through the origin gives no finite bound")
    return Fraction(sum(facet.normal), facet.offset)


@dataclass(frozen=True)
class NewtonPolyhedron:
    dimension: int
    generators: frozenset
    facets: Tuple[Facet, ...]

    def contains(self, point: Sequence) -> bool:
        """Membership via the facet description (independent of the LP route)."""
        p = [Fraction(v) for v in point]
        if len(p) != self.dimension:
            raise ValueError("point dimension mismatch")
        if any(v < 0 for v in p):
            return False
        return all(_dot(f.normal, p) >= f.offset for f in self.facets)


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def canonical_support(support: Iterable[Sequence[int]]) -> Tuple[Tuple[Exponent, ...], int]:
    """Sorted duplicate-free support plus its dimension; rejects malformed input."""
    points = sorted(set(tuple(p) for p in support))
    if not points:
        raise ValueError("support must be nonempty")
    n = len(points[0])
    if n < 1:
        raise ValueError("support points must have at least one coordinate")
    for p in points:
        if len(p) != n:
            raise ValueError("support points must share one dimension")
        if any(not isinstance(v, int) or v < 0 for v in p):
            raise ValueError(f"support point {p} must have nonnegative integer entries")
    return tuple(points), n


def contains_point(support: Iterable[Sequence[int]], point: Sequence) -> bool:
    """LP route: is `point` in conv(support) + nonnegative orthant?

    Feasibility of  sum_j l_j v_j + mu = p,  sum_j l_j = 1,  l, mu >= 0.
    """
    points, n = canonical_support(support)
    p = [Fraction(v) for v in point]
    if len(p) != n:
        raise ValueError("point dimension mismatch")
    k = len(points)
    rows = []
    for i in range(n):
        rows.append([points[j][i] for j in range(k)] + [1 if c == i else 0 for c in range(n)])
    rows.append([1] * k + [0] * n)
    rhs = p + [Fraction(1)]
    return exact_lp.feasible(rows, rhs)


def diagonal_parameter(support: Iterable[Sequence[int]]) -> Fraction:
    """Smallest t with (t, ..., t) in the polyhedron, by exact simplex.

    The LP  min t  s.t.  sum_j l_j v_j[i] + s_i - t = 0,  sum_j l_j = 1
    starts from the feasible basis {l_1 = 1, t = max_i v_1[i]}, so no
    phase 1 is needed.
    """
    points, n = canonical_support(support)
    k = len(points)
    # Columns: t | l_1 .. l_k | s_1 .. s_n | rhs.
    width = 1 + k + n + 1
    rows: List[list] = []
    for i in range(n):
        row = [0] * width
        row[0] = -1
        for j in range(k):
            row[1 + j] = points[j][i]
        row[1 + k + i] = 1
        rows.append(row)
    conv = [0] * width
    for j in range(k):
        conv[1 + j] = 1
    conv[-1] = 1
    rows.append(conv)
    obj = [0] * width
    obj[0] = 1
    rows.append(obj)

    i0 = max(range(n), key=lambda i: points[0][i])
    basis = [1 + k + i for i in range(n)] + [1]
    exact_lp.pivot(rows, n, 1)       # l_1 enters on the convexity row
    exact_lp.pivot(rows, i0, 0)      # t enters on the binding coordinate row
    basis[i0] = 0
    status = exact_lp.bland_min(rows, basis, width - 1)
    if status != exact_lp.OPTIMAL:
        raise AssertionError(f"diagonal LP must be solvable, got {status}")
    tstar = -Fraction(rows[-1][-1])
    return tstar


def _homogenized_generators(points: Sequence[Exponent], n: int) -> List[Tuple[int, ...]]:
    gens = [p + (1,) for p in points]
    for i in range(n):
        ray = [0] * (n + 1)
        ray[i] = 1
        gens.append(tuple(ray))
    return gens


def _primitive_kernel(rows: Sequence[Sequence], width: int) -> Optional[Tuple[int, ...]]:
    """Primitive integer spanning vector of the kernel of a (width-1) x width
    matrix of full row rank; None when the rank is deficient."""
    m = [[Fraction(v) for v in row] for row in rows]
    nrows = len(m)
    pivots: List[Tuple[int, int]] = []
    r = 0
    for c in range(width):
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c]
        m[r] = [v / inv for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    if r < nrows or nrows != width - 1:
        return None
    pivot_cols = {c for _, c in pivots}
    free = next(c for c in range(width) if c not in pivot_cols)
    x = [Fraction(0)] * width
    x[free] = Fraction(1)
    # Gauss-Jordan leaves each pivot row with a 1 at its pivot column and the
    # only other nonzero entry (if any) at the single free column.
    for pr, pc in pivots:
        x[pc] = -m[pr][free]
    denom_lcm = 1
    for v in x:
        denom_lcm = denom_lcm * v.denominator // gcd(denom_lcm, v.denominator)
    ints = [int(v * denom_lcm) for v in x]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints)


def _classify_candidate(
    h: Tuple[int, ...],
    gens: Sequence[Tuple[int, ...]],
    n: int,
) -> Optional[Tuple[Tuple[int, ...], int]]:
    """Orient h so every generator sits on the nonnegative side; reject mixed
    signs and the hyperplane at infinity.  Returns (normal, offset)."""
    positive = negative = False
    for g in gens:
        d = _dot(h, g)
        if d > 0:
            positive = True
        elif d < 0:
            negative = True
        if positive and negative:
            return None
    if negative:
        h = tuple(-v for v in h)
    a = h[:n]
    if all(v == 0 for v in a):
        return None
    if any(v < 0 for v in a):
        return None
    d = -h[n]
    if d < 0:
        return None
    return a, d


def facets(
    support: Iterable[Sequence[int]],
    max_dimension: int = DEFAULT_DIMENSION_CAP,
) -> List[Facet]:
    """All facet-defining inequalities with d > 0, sorted by normal.

    Exhaustive route: every facet of the homogenized cone is spanned by n
    linearly independent generators, so scanning all n-subsets finds each
    one, and every valid hyperplane through such a subset is a facet.
    """
    points, n = canonical_support(support)
    if n > max_dimension:
        raise ResourceCapExceeded(
            f"facet enumeration capped at dimension {max_dimension}, got {n}"
        )
    gens = _homogenized_generators(points, n)
    found = set()
    for combo in itertools.combinations(gens, n):
        h = _primitive_kernel(combo, n + 1)
        if h is None:
            continue
        classified = _classify_candidate(h, gens, n)
        if classified is None:
            continue
        a, d = classified
        if d > 0:
            found.add((a, d))
    return [Facet(a, d) for a, d in sorted(found)]


def diagonal_facets(
    support: Iterable[Sequence[int]],
    tstar: Fraction,
    max_dimension: int = DEFAULT_DIMENSION_CAP,
) -> List[Facet]:
    """Facets whose hyperplane passes through the diagonal crossing point
    (t*, ..., t*); these are the faces deciding the threshold.  Sorted by
    normal, so the first entry is the lexicographic tie-break winner."""
    points, n = canonical_support(support)
    if n > max_dimension:
        raise ResourceCapExceeded(
            f"facet search capped at dimension {max_dimension}, got {n}"
        )
    gens = _homogenized_generators(points, n)
    crossing = tuple([Fraction(tstar)] * n) + (1,)
    found = set()
    for combo in itertools.combinations(gens, n - 1):
        h = _primitive_kernel(list(combo) + [crossing], n + 1)
        if h is None:
            continue
        classified = _classify_candidate(h, gens, n)
        if classified is None:
            continue
        a, d = classified
        if d > 0:
            found.add((a, d))
    return [Facet(a, d) for a, d in sorted(found)]


def newton_polyhedron(
    support: Iterable[Sequence[int]],
    max_dimension: int = DEFAULT_DIMENSION_CAP,
) -> NewtonPolyhedron:
    points, n = canonical_support(support)
    return NewtonPolyhedron(
        dimension=n,
        generators=frozenset(points),
        facets=tuple(facets(points, max_dimension)),
    )
