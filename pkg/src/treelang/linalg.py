"""Exact null spaces by fraction-free elimination over the integers."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def _content(row: list[int]) -> int:
    g = 0
    for x in row:
        g = gcd(g, x)
    return g


def _integer_row(row: Sequence) -> list[int]:
    den = 1
    for x in row:
        d = Fraction(x).denominator
        den = den * d // gcd(den, d)
    return [int(Fraction(x) * den) for x in row]


def row_reduce(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Reduced echelon form with integer rows; returns (rows, pivot columns).

    Each pivot row has a nonzero entry in its pivot column and zeros in
    every other pivot column.  Rows are kept primitive to limit growth.
    """
    mat = [_integer_row(r) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        p = mat[r][c]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [p * a - f * b for a, b in zip(mat[i], mat[r])]
                g = _content(mat[i])
                if g > 1:
                    mat[i] = [a // g for a in mat[i]]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {v : rows * v = 0}, one vector per free column."""
    mat, pivots = row_reduce(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(mat, pivots):
            v[c] = Fraction(-row[f], row[c])
        basis.append(v)
    return basis
