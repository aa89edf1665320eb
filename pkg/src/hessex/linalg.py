"""Exact linear algebra over Q on sparse rows.

Rows are dicts ``column -> Fraction | int``.  Heavy work goes to FLINT's
integer matrices (fraction-free elimination); each row is first scaled to
integer entries, which leaves ranks and row spaces unchanged.
:func:`rref_python` is a slow pure-Fraction elimination kept as an
independent cross-check.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

import flint

Row = Mapping[int, "Fraction | int"]


def _integer_matrix(rows: Sequence[Row], ncols: int) -> "flint.fmpz_mat":
    M = flint.fmpz_mat(len(rows), ncols)
    for r, row in enumerate(rows):
        den = 1
        for v in row.values():
            if isinstance(v, Fraction) and v.denominator != 1:
                den = lcm(den, v.denominator)
        for c, v in row.items():
            if v:
                M[r, c] = int(v * den) if den != 1 else int(v)
    return M


def rank(rows: Sequence[Row], ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    return int(_integer_matrix(rows, ncols).rank())


def rref(rows: Sequence[Row], ncols: int) -> list[tuple[int, dict[int, Fraction]]]:
    """Reduced row echelon form as ``(pivot_column, row)`` pairs, pivots = 1."""
    if not rows or ncols == 0:
        return []
    R, den, rk = _integer_matrix(rows, ncols).rref()
    den = int(den)
    out = []
    for r in range(int(rk)):
        entries = {}
        pivot = None
        for c in range(ncols):
            v = int(R[r, c])
            if v:
                if pivot is None:
                    pivot = c
                entries[c] = Fraction(v, den)
        out.append((pivot, entries))
    return out


def rref_with_leading_block(rows: Sequence[Row], ncols: int, k: int):
    """Eliminate when columns ``0..k-1`` are expected to be exactly the pivots.

    Returns ``(ok, tail)``: ``ok`` is true iff the rank is ``k`` and the first
    ``k`` columns are the pivot columns; ``tail[i]`` holds the entries of
    pivot row ``i`` in columns ``k..ncols-1`` (dict, pivot normalized to 1).
    """
    if k == 0:
        return rank(rows, ncols) == 0, []
    if not rows:
        return False, []
    R, den, rk = _integer_matrix(rows, ncols).rref()
    if int(rk) != k:
        return False, []
    den = int(den)
    for i in range(k):
        if int(R[i, i]) == 0:
            return False, []
    tail = []
    for i in range(k):
        d = int(R[i, i])
        entries = {}
        for c in range(k, ncols):
            v = int(R[i, c])
            if v:
                entries[c] = Fraction(v, d)
        tail.append(entries)
    return True, tail


def nullspace(rows: Sequence[Row], ncols: int) -> list[dict[int, Fraction]]:
    """A basis of ``{v : row . v = 0 for every row}``."""
    if ncols == 0:
        return []
    if not rows:
        return [{c: Fraction(1)} for c in range(ncols)]
    X, nullity = _integer_matrix(rows, ncols).nullspace()
    out = []
    for c in range(int(nullity)):
        vec = {}
        for r in range(ncols):
            v = int(X[r, c])
            if v:
                vec[r] = Fraction(v)
        out.append(vec)
    return out


def rref_python(rows: Iterable[Row], ncols: int) -> list[tuple[int, dict[int, Fraction]]]:
    """Plain Gauss-Jordan over Fractions; same output contract as :func:`rref`."""
    work = [{c: Fraction(v) for c, v in row.items() if v} for row in rows]
    pivots: list[tuple[int, dict[int, Fraction]]] = []
    for col in range(ncols):
        src = next((r for r in work if r.get(col)), None)
        if src is None:
            continue
        work.remove(src)
        inv = 1 / src[col]
        src = {c: v * inv for c, v in src.items()}
        for other in [p[1] for p in pivots] + work:
            f = other.get(col)
            if f:
                for c, v in src.items():
                    nv = other.get(c, 0) - f * v
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
        pivots.append((col, src))
    return pivots
