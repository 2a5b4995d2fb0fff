# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: subgroup closure, double-coset labeling, exact rank.

Mirrors walllat.kernels._pure; the int64 rank returns -1 when an entry gets
close to overflow so the caller can retry with arbitrary precision.
"""

import numpy as np

BACKEND = "compiled"

# Entries are kept below 2^30 so that the Bareiss update |a*d - b*c| stays
# below 2^61 and the exact division cannot overflow int64.
cdef long long _RANK_LIMIT = 1 << 30


def closure_flags(const int[:, ::1] mult, const int[::1] seed):
    cdef int n = mult.shape[0]
    flags_arr = np.zeros(n, dtype=np.uint8)
    members_arr = np.empty(n, dtype=np.int32)
    cdef unsigned char[::1] flags = flags_arr
    cdef int[::1] members = members_arr
    cdef int count = 0, k = 0, i, p, z, m

    flags[0] = 1
    members[count] = 0
    count += 1
    for i in range(seed.shape[0]):
        z = seed[i]
        if not flags[z]:
            flags[z] = 1
            members[count] = z
            count += 1

    while k < count:
        z = members[k]
        for i in range(count):
            m = members[i]
            p = mult[z, m]
            if not flags[p]:
                flags[p] = 1
                members[count] = p
                count += 1
            p = mult[m, z]
            if not flags[p]:
                flags[p] = 1
                members[count] = p
                count += 1
        k += 1
    return flags_arr


def double_coset_labels(const int[:, ::1] mult, const int[::1] a_ids, const int[::1] b_ids):
    cdef int n = mult.shape[0]
    cdef int na = a_ids.shape[0], nb = b_ids.shape[0]
    labels_arr = np.full(n, -1, dtype=np.int32)
    cdef int[::1] labels = labels_arr
    cdef int x, i, j, xb, y, lab

    for x in range(n):
        if labels[x] >= 0:
            continue
        lab = x  # x = e*x*e is always in its own double coset
        for j in range(nb):
            xb = mult[x, b_ids[j]]
            for i in range(na):
                y = mult[a_ids[i], xb]
                if labels[y] < 0:
                    labels[y] = lab
    return labels_arr


def assoc_violation(const int[:, ::1] mult):
    cdef int n = mult.shape[0]
    cdef int a, b, c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mult[mult[a, b], c] != mult[a, mult[b, c]]:
                    return (<long long> a) * n * n + b * n + c
    return -1


def rank_int64(long long[:, ::1] mat):
    """Bareiss rank over int64; returns -1 if intermediate growth is unsafe."""
    cdef int nrows = mat.shape[0], ncols = mat.shape[1]
    cdef int rank = 0, col = 0, pivot_row, i, j
    cdef long long prev = 1, piv, fac, v
    m_arr = np.array(mat, dtype=np.int64)
    cdef long long[:, ::1] m = m_arr

    while rank < nrows and col < ncols:
        pivot_row = -1
        for i in range(rank, nrows):
            if m[i, col] != 0:
                pivot_row = i
                break
        if pivot_row < 0:
            col += 1
            continue
        if pivot_row != rank:
            for j in range(ncols):
                v = m[rank, j]
                m[rank, j] = m[pivot_row, j]
                m[pivot_row, j] = v
        piv = m[rank, col]
        if piv > _RANK_LIMIT or -piv > _RANK_LIMIT:
            return -1
        for i in range(rank + 1, nrows):
            fac = m[i, col]
            if fac > _RANK_LIMIT or -fac > _RANK_LIMIT:
                return -1
            for j in range(col, ncols):
                v = m[rank, j]
                if v > _RANK_LIMIT or -v > _RANK_LIMIT or m[i, j] > _RANK_LIMIT or -m[i, j] > _RANK_LIMIT:
                    return -1
                m[i, j] = (m[i, j] * piv - fac * v) // prev
        prev = piv
        rank += 1
        col += 1
    return rank
