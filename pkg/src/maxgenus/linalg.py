"""Exact rank and determinant: dense elimination over GF(p), Bareiss over QQ."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Sequence, Tuple

import numpy as np

# entries stay below 2^31, so products fit in int64
_INT64_SAFE = 1 << 31


def rank_det_mod_p(A, p: int) -> Tuple[int, int]:
    """Return ``(rank, det)`` of an integer matrix modulo the prime ``p``.

    ``det`` is only meaningful for square input; for rectangular input it is 0.
    """
    if len(A) == 0:
        return 0, 1
    dtype = np.int64 if p < _INT64_SAFE else object
    M = np.array(A, dtype=dtype)
    if M.ndim != 2:
        M = M.reshape(len(A), -1)
    nrows, ncols = M.shape
    if nrows == 0 or ncols == 0:
        return 0, int(nrows == ncols)
    M %= p
    det = 1 if nrows == ncols else 0
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            det = 0
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
            det = -det
        pv = int(M[r, c])
        det = det * pv % p
        M[r, c:] = M[r, c:] * pow(pv, -1, p) % p
        below = r + 1 + np.flatnonzero(M[r + 1:, c])
        if below.size:
            M[below, c:] = (M[below, c:] - np.outer(M[below, c], M[r, c:])) % p
        r += 1
    if r < min(nrows, ncols):
        det = 0
    return r, det % p


def _integerize(rows: Sequence[Sequence]) -> List[List[int]]:
    out = []
    for row in rows:
        fr = [Fraction(v) for v in row]
        scale = lcm(*(f.denominator for f in fr)) if fr else 1
        out.append([int(f * scale) for f in fr])
    return out


def bareiss_rank_det(rows: Sequence[Sequence]) -> Tuple[int, Fraction]:
    """Fraction-free elimination over QQ; returns ``(rank, det)``.

    Each row is first scaled to integers, which changes the determinant, so
    the determinant is reported for the original rows by undoing the scales.
    """
    fr_rows = [[Fraction(v) for v in row] for row in rows]
    scales = [lcm(*(f.denominator for f in row)) if row else 1 for row in fr_rows]
    A = _integerize(fr_rows)
    n = len(A)
    m = len(A[0]) if A else 0
    prev = 1
    sign = 1
    r = 0
    for c in range(m):
        if r == n:
            break
        piv = next((i for i in range(r, n) if A[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
            sign = -sign
        arc = A[r][c]
        Ar = A[r]
        for i in range(r + 1, n):
            Ai = A[i]
            aic = Ai[c]
            for j in range(c + 1, m):
                Ai[j] = (arc * Ai[j] - aic * Ar[j]) // prev
            Ai[c] = 0
        prev = arc
        r += 1
    det = Fraction(0)
    if n == m and r == n:
        det = Fraction(sign * prev)
        for s in scales:
            det /= s
    return r, det


def matrix_rank(rows, field) -> int:
    """Rank of a matrix with entries in ``field`` (GF(p) or QQ)."""
    if not rows or not len(rows[0]):
        return 0
    if field.characteristic:
        return rank_det_mod_p(rows, field.characteristic)[0]
    return bareiss_rank_det(rows)[0]
