"""Row reduction over GF(p) (numpy, int64) and over QQ (Fractions)."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

_NUMPY_PRIME_LIMIT = 2**31


def echelon_mod_p(A: np.ndarray, p: int, stop_rank: int | None = None):
    """Forward elimination of the rows of A modulo p.

    Returns (pivot_columns, echelon_rows).  Columns are scanned left to
    right, so pivot columns are the leading positions of the row space.
    Stops early once ``stop_rank`` pivots are found.
    """
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows or (stop_rank is not None and r >= stop_rank):
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r, c:] = (A[r, c:] * inv) % p
        below = np.flatnonzero(A[r + 1 :, c])
        if below.size:
            below += r + 1
            f = A[below, c].copy()
            A[np.ix_(below, np.arange(c, cols))] = (A[below, c:] - np.outer(f, A[r, c:])) % p
        pivots.append(c)
        r += 1
    return pivots, A[:r]


def rank_mod_p(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    if p >= _NUMPY_PRIME_LIMIT:
        return _rank_generic(A.tolist(), lambda x: x % p, lambda x: pow(x, p - 2, p))
    return len(echelon_mod_p(A, p)[0])


def _rank_generic(rows, norm, inv) -> int:
    rows = [[norm(x) for x in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        iv = inv(rows[rank][c])
        pr = [norm(x * iv) for x in rows[rank]]
        rows[rank] = pr
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [norm(x - f * y) for x, y in zip(rows[i], pr)]
        rank += 1
    return rank


def rank_rational(rows) -> int:
    return _rank_generic([[Fraction(x) for x in r] for r in rows], lambda x: x, lambda x: 1 / x)


def rank(rows, p: int) -> int:
    """Rank over GF(p), or over QQ when p == 0."""
    if p == 0:
        return rank_rational(rows)
    return rank_mod_p(rows, p)
