"""Compiled inner loop for submodule counting.

The hot spot of Hall-number counting is the sweep over all subspaces of the
last vertex space that contain a given subspace, recording for each one the
dimensions of its sums with a nested family of fixed subspaces.  That sweep
runs here under numba; everything else stays in Python.
"""

from __future__ import annotations

import numpy as np
from numba import njit, types
from numba.typed import Dict

from .fields import GF

KEY_BASE = 16


def field_tables(f: GF) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    return (
        np.asarray(f.add, dtype=np.int64),
        np.asarray(f.mul, dtype=np.int64),
        np.asarray(f.neg, dtype=np.int64),
        np.asarray(f.inv, dtype=np.int64),
    )


@njit(cache=True)
def _rank(work, nrows, ncols, add, mul, neg, inv):
    rank = 0
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if work[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for c in range(ncols):
                tmp = work[rank, c]
                work[rank, c] = work[piv, c]
                work[piv, c] = tmp
        iv = inv[work[rank, col]]
        for c in range(ncols):
            work[rank, c] = mul[iv, work[rank, c]]
        for r in range(rank + 1, nrows):
            x = work[r, col]
            if x != 0:
                nx = neg[x]
                for c in range(ncols):
                    work[r, c] = add[work[r, c], mul[nx, work[rank, c]]]
        rank += 1
    return rank


@njit(cache=True)
def superspace_histogram(add, mul, neg, inv, t, base, free_cols, k, fixed, fixed_sizes):
    """Histogram of ``(dim(F_a + W))_a`` over all ``k``-dim ``W`` containing ``base``.

    ``base`` is an RREF basis (``u x t``) whose non-pivot columns are
    ``free_cols``; ``fixed[a]`` holds ``fixed_sizes[a]`` spanning rows of the
    subspace ``F_a``.  Keys encode the dimension tuple in base 16.
    """
    q = add.shape[0]
    u = base.shape[0]
    m = free_cols.shape[0]
    kk = k - u
    hist = Dict.empty(key_type=types.int64, value_type=types.int64)
    if kk < 0 or kk > m:
        return hist
    nfix = fixed_sizes.shape[0]
    maxfix = fixed.shape[1] if nfix > 0 else 0
    work = np.zeros((maxfix + k + 1, t), dtype=np.int64)
    wrows = np.zeros((k, t), dtype=np.int64)
    for i in range(u):
        for c in range(t):
            wrows[i, c] = base[i, c]
    piv = np.zeros(max(kk, 1), dtype=np.int64)
    free_i = np.zeros(m * m + 1, dtype=np.int64)
    free_j = np.zeros(m * m + 1, dtype=np.int64)
    vals = np.zeros(m * m + 1, dtype=np.int64)
    for mask in range(1 << m):
        cnt = 0
        for j in range(m):
            if (mask >> j) & 1:
                cnt += 1
        if cnt != kk:
            continue
        idx = 0
        for j in range(m):
            if (mask >> j) & 1:
                piv[idx] = j
                idx += 1
        nf = 0
        for i in range(kk):
            for j in range(piv[i] + 1, m):
                if not ((mask >> j) & 1):
                    free_i[nf] = i
                    free_j[nf] = j
                    nf += 1
        for i in range(nf):
            vals[i] = 0
        while True:
            for i in range(kk):
                for c in range(t):
                    wrows[u + i, c] = 0
                wrows[u + i, free_cols[piv[i]]] = 1
            for i in range(nf):
                wrows[u + free_i[i], free_cols[free_j[i]]] = vals[i]
            key = 0
            for a in range(nfix):
                nr = fixed_sizes[a]
                for r in range(nr):
                    for c in range(t):
                        work[r, c] = fixed[a, r, c]
                for r in range(k):
                    for c in range(t):
                        work[nr + r, c] = wrows[r, c]
                key = key * 16 + _rank(work, nr + k, t, add, mul, neg, inv)
            if key in hist:
                hist[key] += 1
            else:
                hist[key] = 1
            # odometer over the free entries
            pos = 0
            while pos < nf:
                vals[pos] += 1
                if vals[pos] < q:
                    break
                vals[pos] = 0
                pos += 1
            if pos == nf:
                break
    return hist


def decode_key(key: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        out.append(key % KEY_BASE)
        key //= KEY_BASE
    return tuple(reversed(out))
