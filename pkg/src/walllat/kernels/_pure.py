"""Pure-Python (numpy vectorized) implementations of the hot kernels.

Semantics must match ``_compiled.pyx`` exactly; ``tests/test_kernels.py``
checks the two backends against each other.
"""

from __future__ import annotations

import numpy as np

BACKEND = "pure"


def closure_flags(mult: np.ndarray, seed: np.ndarray) -> np.ndarray:
    """Membership flags of the multiplicative closure of ``seed`` (plus identity 0)."""
    n = mult.shape[0]
    flags = np.zeros(n, dtype=np.uint8)
    flags[0] = 1
    if seed.size:
        flags[seed] = 1
    members = np.flatnonzero(flags)
    frontier = members
    while frontier.size:
        prods = np.concatenate(
            (
                mult[np.ix_(frontier, members)].ravel(),
                mult[np.ix_(members, frontier)].ravel(),
            )
        )
        prods = np.unique(prods)
        new = prods[flags[prods] == 0]
        if new.size:
            flags[new] = 1
            members = np.flatnonzero(flags)
        frontier = new
    return flags


def double_coset_labels(mult: np.ndarray, a_ids: np.ndarray, b_ids: np.ndarray) -> np.ndarray:
    """labels[x] = smallest element of the double coset A.x.B containing x."""
    n = mult.shape[0]
    labels = np.full(n, -1, dtype=np.int32)
    for x in range(n):
        if labels[x] >= 0:
            continue
        xb = mult[x, b_ids]
        coset = np.unique(mult[np.ix_(a_ids, xb)])
        labels[coset] = coset[0]
    return labels


def assoc_violation(mult: np.ndarray) -> int:
    """Encoded index a*n*n + b*n + c of the first non-associative triple, or -1."""
    n = mult.shape[0]
    for a in range(n):
        left = mult[mult[a], :]  # left[b, c] = (a*b)*c
        right = mult[a][mult]  # right[b, c] = a*(b*c)
        bad = np.argwhere(left != right)
        if bad.size:
            b, c = int(bad[0][0]), int(bad[0][1])
            return a * n * n + b * n + c
    return -1


def rank_int(rows: list[list[int]]) -> int:
    """Exact rank of an integer matrix by fraction-free (Bareiss) elimination.

    Arbitrary-precision: never overflows, always exact.
    """
    m = [list(row) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = 1
    col = 0
    while rank < nrows and col < ncols:
        pivot_row = -1
        for i in range(rank, nrows):
            if m[i][col] != 0:
                pivot_row = i
                break
        if pivot_row < 0:
            col += 1
            continue
        if pivot_row != rank:
            m[rank], m[pivot_row] = m[pivot_row], m[rank]
        piv = m[rank][col]
        for i in range(rank + 1, nrows):
            fac = m[i][col]
            row_i = m[i]
            row_r = m[rank]
            for j in range(col, ncols):
                row_i[j] = (row_i[j] * piv - fac * row_r[j]) // prev
        prev = piv
        rank += 1
        col += 1
    return rank
