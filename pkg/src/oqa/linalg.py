"""Exact sparse linear algebra over the scalar field.

Plain Gauss-Jordan elimination on dictionary rows.  Scalars are quotients of
Laurent polynomials, so every division is exact; pivots are chosen to keep
entries monomial where possible, which controls expression swell on the kinds
of matrices this library produces (mostly monomial entries).  Results are
always verified by the callers through multiplication, never trusted blindly.
"""

from __future__ import annotations

from .scalars import Scalar


class SingularMatrixError(Exception):
    """The matrix has no inverse over the scalar field."""


def _pivot_weight(value, row):
    # prefer short rows with structurally simple pivots
    num_terms = len(value.num.terms)
    den_terms = len(value.den.terms)
    return (den_terms > 1, num_terms, len(row))


def _eliminate(rows, extras, n):
    """Gauss-Jordan on sparse rows; ``extras`` are companion row dicts.

    Returns (pivot_row_of_col, rows, extras) with each pivot row reduced to
    ``{col: 1}`` in ``rows``.
    """
    free = list(range(len(rows)))
    pivot_row = {}
    for col in range(n):
        best = None
        for r in free:
            value = rows[r].get(col)
            if value is not None and not value.is_zero():
                weight = _pivot_weight(value, rows[r])
                if best is None or weight < best[0]:
                    best = (weight, r)
        if best is None:
            raise SingularMatrixError(f"no pivot for column {col}")
        r = best[1]
        free.remove(r)
        pivot_row[col] = r
        inv = rows[r][col].reciprocal()
        rows[r] = {c: v * inv for c, v in rows[r].items() if not v.is_zero()}
        extras[r] = {c: v * inv for c, v in extras[r].items() if not v.is_zero()}
        for other in range(len(rows)):
            if other == r:
                continue
            factor = rows[other].get(col)
            if factor is None or factor.is_zero():
                continue
            for c, v in rows[r].items():
                cur = rows[other].get(c)
                updated = (cur - factor * v) if cur is not None else -(factor * v)
                if updated.is_zero():
                    rows[other].pop(c, None)
                else:
                    rows[other][c] = updated
            for c, v in extras[r].items():
                cur = extras[other].get(c)
                updated = (cur - factor * v) if cur is not None else -(factor * v)
                if updated.is_zero():
                    extras[other].pop(c, None)
                else:
                    extras[other][c] = updated
    return pivot_row, rows, extras


def solve_sparse(rows, rhs, n, params=()):
    """Solve ``A x = b``; rows are dicts col -> Scalar, rhs a dict row -> Scalar.

    Returns the solution as a dict col -> Scalar (zeros omitted).
    """
    work = [dict(row) for row in rows]
    extras = [{0: rhs[i]} if i in rhs and not rhs[i].is_zero() else {} for i in range(len(rows))]
    pivot_row, work, extras = _eliminate(work, extras, n)
    solution = {}
    for col, r in pivot_row.items():
        value = extras[r].get(0)
        if value is not None and not value.is_zero():
            solution[col] = value
    for r, row in enumerate(work):
        if r not in pivot_row.values() and extras[r]:
            raise SingularMatrixError("inconsistent system")
    return solution


def invert_sparse(rows, n):
    """Invert the n-by-n matrix given as dict rows; result again as dict rows."""
    work = [dict(row) for row in rows]
    one = Scalar.one()
    extras = [{i: one} for i in range(n)]
    pivot_row, work, extras = _eliminate(work, extras, n)
    inverse = [dict() for _ in range(n)]
    for col, r in pivot_row.items():
        inverse[col] = extras[r]
    return inverse
