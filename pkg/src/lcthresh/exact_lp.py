"""Exact rational linear programming via the simplex method.

Dense tableau simplex over `fractions.Fraction` with Bland's rule for
both the entering and the leaving variable, so no cycling and no
tolerances anywhere.  Tableau entries may be plain ints; arithmetic
promotes to Fraction exactly when a pivot forces it.

Tableau convention: `rows[:-1]` are the constraint rows `[A | b]` in
canonical form with respect to `basis` (basis[i] = column basic in row
i).  `rows[-1]` is the objective row `[reduced costs | -z]`; pivoting
keeps it current like any other row.

Problems are stated in equality standard form: minimize c.x subject to
A x = b, x >= 0.  `solve_min` runs the usual two phases; callers that
can exhibit a feasible basis directly (the diagonal-parameter LP does)
may build a canonical tableau themselves and call `bland_min`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _exact_div(num, den) -> Fraction:
    if isinstance(num, int) and isinstance(den, int):
        return Fraction(num, den)
    return Fraction(num) / den


def pivot(rows: List[list], prow: int, pcol: int) -> None:
    """Make column pcol basic in row prow, eliminating it elsewhere."""
    piv = rows[prow][pcol]
    if piv == 0:
        raise ZeroDivisionError("pivot on a zero element")
    if piv != 1:
        pivf = Fraction(piv) if isinstance(piv, int) else piv
        rows[prow] = [v / pivf for v in rows[prow]]
    prow_vals = rows[prow]
    for i, row in enumerate(rows):
        if i == prow:
            continue
        factor = row[pcol]
        if factor:
            rows[i] = [a - factor * b for a, b in zip(row, prow_vals)]


def bland_min(rows: List[list], basis: List[int], num_cols: int) -> str:
    """Minimize the objective row in place; entering columns range over [0, num_cols)."""
    m = len(rows) - 1
    while True:
        obj = rows[-1]  # pivot rebinds rows, so re-read every pass
        enter = -1
        for j in range(num_cols):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL
        leave = -1
        best = None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = _exact_div(rows[i][-1], a)
                if leave < 0 or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave < 0:
            return UNBOUNDED
        pivot(rows, leave, enter)
        basis[leave] = enter


def solve_min(
    objective: Sequence,
    constraints: Sequence[Sequence],
    rhs: Sequence,
) -> Tuple[str, List[Fraction], Fraction]:
    """Two-phase simplex.  Returns (status, x, value); x and value are
    meaningful only when status is OPTIMAL."""
    m = len(constraints)
    n = len(objective)
    rows: List[list] = []
    for i in range(m):
        row = list(constraints[i])
        if len(row) != n:
            raise ValueError("constraint row length does not match objective")
        b = rhs[i]
        if b < 0:
            row = [-v for v in row]
            b = -b
        rows.append(row + [0] * m + [b])
    for i in range(m):
        rows[i][n + i] = 1
    basis = [n + i for i in range(m)]

    # Phase 1: minimize the sum of artificials.
    obj = [0] * (n + m) + [0]
    for i in range(m):
        for j in range(n):
            obj[j] -= rows[i][j]
        obj[-1] -= rows[i][-1]
    rows.append(obj)
    if bland_min(rows, basis, n + m) != OPTIMAL:
        raise ValueError("phase 1 cannot be unbounded")
    if -rows[-1][-1] != 0:
        return INFEASIBLE, [], Fraction(0)
    rows.pop()

    # Drive leftover artificials out of the basis; drop redundant rows.
    keep: List[int] = []
    for i in range(m):
        if basis[i] >= n:
            for j in range(n):
                if rows[i][j] != 0:
                    pivot(rows, i, j)
                    basis[i] = j
                    break
        if basis[i] < n:
            keep.append(i)
    rows = [[rows[i][j] for j in range(n)] + [rows[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    # Phase 2.
    obj = list(objective) + [0]
    rows.append(obj)
    for i, row in enumerate(rows[:-1]):
        factor = rows[-1][basis[i]]
        if factor:
            rows[-1] = [a - factor * b for a, b in zip(rows[-1], row)]
    status = bland_min(rows, basis, n)
    if status != OPTIMAL:
        return status, [], Fraction(0)
    x = [Fraction(0)] * n
    for i, b in enumerate(basis):
        x[b] = Fraction(rows[i][-1])
    return OPTIMAL, x, -Fraction(rows[-1][-1])


def feasible(constraints: Sequence[Sequence], rhs: Sequence) -> bool:
    """Is {x >= 0 : A x = b} nonempty?  Phase 1 only."""
    n = len(constraints[0]) if constraints else 0
    status, _, _ = solve_min([0] * n, constraints, rhs)
    return status == OPTIMAL
