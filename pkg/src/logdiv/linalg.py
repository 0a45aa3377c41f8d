"""Dense exact linear algebra over the rationals (thin wrappers over FLINT)."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

import flint

__all__ = ["rank", "nullspace", "rref"]


def _int_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        den = 1
        for c in row:
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        out.append([int(c * den) for c in row])
    return out


def _q(c):
    c = Fraction(c)
    return flint.fmpq(c.numerator, c.denominator)


def _fmpz(rows, ncols):
    if not rows:
        return flint.fmpz_mat(0, ncols)
    return flint.fmpz_mat(_int_rows(rows))


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    """Rank of a rational matrix given as a list of rows."""
    if not rows:
        return 0
    ncols = len(rows[0]) if ncols is None else ncols
    if ncols == 0:
        return 0
    return _fmpz(rows, ncols).rank()


def rref(rows: Sequence[Sequence], ncols: int | None = None):
    """Reduced row echelon form: ``(rows, pivot_columns)`` with Fraction entries."""
    if not rows:
        return [], []
    ncols = len(rows[0]) if ncols is None else ncols
    M = flint.fmpq_mat(len(rows), ncols, [_q(c) for row in rows for c in row])
    R, rk = M.rref()
    out, pivots = [], []
    for i in range(rk):
        row = [Fraction(int(R[i, j].p), int(R[i, j].q)) for j in range(ncols)]
        pivots.append(next(j for j, c in enumerate(row) if c))
        out.append(row)
    return out, pivots


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{v : A v = 0}``, one vector per free column, from the RREF.

    Each vector has a 1 in its free column and is scaled to integers with
    positive first nonzero entry, so the output is canonical.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    R, pivots = rref(rows, ncols)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for j in free:
        v = [Fraction(0)] * ncols
        v[j] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[j]
        den = 1
        for c in v:
            den = lcm(den, c.denominator)
        v = [c * den for c in v]
        first = next(c for c in v if c)
        if first < 0:
            v = [-c for c in v]
        basis.append(v)
    return basis
