# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled clique kernels over uint64 bit rows.

Mirrors ``regsat._pykernels``; every function takes the ``(n, W)`` adjacency
array of a :class:`regsat.graph.Graph`.  The search releases the GIL.
"""
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memset

import numpy as np

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil


cdef inline uint64_t above_mask(Py_ssize_t w) noexcept nogil:
    # bits strictly above position w inside its word
    return ~((<uint64_t>2 << (w & 63)) - 1)


cdef bint _search(const uint64_t* A, Py_ssize_t W, uint64_t* cand, Py_ssize_t lo,
                  Py_ssize_t hi, int need, uint64_t* scratch, int* out) noexcept nogil:
    """Find ``need`` pairwise adjacent vertices in ``cand`` (words lo..hi-1).

    ``scratch`` holds W words per remaining recursion level; found vertices
    are written to ``out[0..need-1]`` in increasing order.
    """
    cdef Py_ssize_t i, j, nlo, nhi, ww
    cdef int count = 0, remaining
    cdef uint64_t word, bit, x
    cdef const uint64_t* row
    cdef uint64_t* nxt
    cdef Py_ssize_t v

    if need <= 0:
        return True
    for i in range(lo, hi):
        count += popcount64(cand[i])
    if count < need:
        return False
    if need == 1:
        for i in range(lo, hi):
            if cand[i]:
                out[0] = <int>(i * 64 + ctz64(cand[i]))
                return True
    remaining = count
    nxt = scratch
    for i in range(lo, hi):
        word = cand[i]
        while word:
            if remaining < need:
                return False
            bit = word & (~word + 1)
            v = i * 64 + ctz64(word)
            word ^= bit
            remaining -= 1
            row = A + v * W
            if need == 2:
                x = cand[i] & row[i] & above_mask(v)
                if x:
                    out[0] = <int>v
                    out[1] = <int>(i * 64 + ctz64(x))
                    return True
                for j in range(i + 1, hi):
                    x = cand[j] & row[j]
                    if x:
                        out[0] = <int>v
                        out[1] = <int>(j * 64 + ctz64(x))
                        return True
                continue
            nlo = -1
            nhi = i
            nxt[i] = cand[i] & row[i] & above_mask(v)
            if nxt[i]:
                nlo = i
                nhi = i + 1
            for j in range(i + 1, hi):
                nxt[j] = cand[j] & row[j]
                if nxt[j]:
                    if nlo < 0:
                        nlo = j
                    nhi = j + 1
            if nlo < 0:
                continue
            if _search(A, W, nxt, nlo, nhi, need - 1, scratch + W, out + 1):
                out[0] = <int>v
                return True
    return False


def clique_in_set(const uint64_t[:, ::1] adj, cand_vertices, int k):
    """k pairwise adjacent vertices among ``cand_vertices`` or None."""
    cdef Py_ssize_t n = adj.shape[0], W = adj.shape[1]
    cdef uint64_t* cand
    cdef uint64_t* scratch
    cdef int* out
    cdef bint found
    cdef Py_ssize_t v
    if k <= 0:
        return []
    if n == 0:
        return None
    cand = <uint64_t*>malloc(W * sizeof(uint64_t))
    scratch = <uint64_t*>malloc(W * (k + 1) * sizeof(uint64_t))
    out = <int*>malloc((k + 1) * sizeof(int))
    try:
        memset(cand, 0, W * sizeof(uint64_t))
        for v in cand_vertices:
            cand[v >> 6] |= (<uint64_t>1) << (v & 63)
        with nogil:
            found = _search(&adj[0, 0], W, cand, 0, W, k, scratch, out)
        return [out[i] for i in range(k)] if found else None
    finally:
        free(cand)
        free(scratch)
        free(out)


def clique_through(const uint64_t[:, ::1] adj, Py_ssize_t u, Py_ssize_t v, int k):
    """Vertices completing a k-clique with u and v (edge uv assumed or added)."""
    cdef Py_ssize_t n = adj.shape[0], W = adj.shape[1], i
    cdef uint64_t* cand
    cdef uint64_t* scratch
    cdef int* out
    cdef bint found
    if k <= 2:
        return []
    cand = <uint64_t*>malloc(W * sizeof(uint64_t))
    scratch = <uint64_t*>malloc(W * (k + 1) * sizeof(uint64_t))
    out = <int*>malloc((k + 1) * sizeof(int))
    try:
        with nogil:
            for i in range(W):
                cand[i] = adj[u, i] & adj[v, i]
            found = _search(&adj[0, 0], W, cand, 0, W, k - 2, scratch, out)
        return [out[i] for i in range(k - 2)] if found else None
    finally:
        free(cand)
        free(scratch)
        free(out)


def find_clique(const uint64_t[:, ::1] adj, int k):
    """Lexicographically first-rooted k-clique of the graph, or None."""
    cdef Py_ssize_t n = adj.shape[0], W = adj.shape[1], v, i, lo, hi
    cdef uint64_t* cand
    cdef uint64_t* scratch
    cdef int* out
    cdef bint found = False
    if k <= 0:
        return []
    if n == 0:
        return None
    if k == 1:
        return [0]
    cand = <uint64_t*>malloc(W * sizeof(uint64_t))
    scratch = <uint64_t*>malloc(W * (k + 1) * sizeof(uint64_t))
    out = <int*>malloc((k + 1) * sizeof(int))
    try:
        with nogil:
            for v in range(n):
                lo = -1
                hi = 0
                for i in range(W):
                    if i < (v >> 6):
                        cand[i] = 0
                    elif i == (v >> 6):
                        cand[i] = adj[v, i] & above_mask(v)
                    else:
                        cand[i] = adj[v, i]
                    if cand[i]:
                        if lo < 0:
                            lo = i
                        hi = i + 1
                if lo < 0:
                    continue
                if _search(&adj[0, 0], W, cand, lo, hi, k - 1, scratch, out + 1):
                    out[0] = <int>v
                    found = True
                    break
        return [out[i] for i in range(k)] if found else None
    finally:
        free(cand)
        free(scratch)
        free(out)


def first_unsaturated(const uint64_t[:, ::1] adj, int k, Py_ssize_t start_u=0, Py_ssize_t start_v=0):
    """First non-edge (u, v), u < v, in lexicographic order from (start_u, start_v)
    whose common neighbourhood holds no (k-2)-clique; None if every non-edge
    completes a k-clique."""
    cdef Py_ssize_t n = adj.shape[0], W = adj.shape[1], u, v, i, lo, hi
    cdef uint64_t* cand
    cdef uint64_t* scratch
    cdef int* out
    cdef Py_ssize_t bad_u = -1, bad_v = -1
    cdef bint ok
    if n < 2:
        return None
    cand = <uint64_t*>malloc(W * sizeof(uint64_t))
    scratch = <uint64_t*>malloc(W * (k + 1) * sizeof(uint64_t))
    out = <int*>malloc((k + 1) * sizeof(int))
    try:
        with nogil:
            for u in range(start_u, n):
                for v in range((start_v if u == start_u else 0), n):
                    if v <= u or (adj[u, v >> 6] >> (v & 63)) & 1:
                        continue
                    if k <= 2:
                        ok = True
                    else:
                        lo = -1
                        hi = 0
                        for i in range(W):
                            cand[i] = adj[u, i] & adj[v, i]
                            if cand[i]:
                                if lo < 0:
                                    lo = i
                                hi = i + 1
                        ok = lo >= 0 and _search(&adj[0, 0], W, cand, lo, hi, k - 2, scratch, out)
                    if not ok:
                        bad_u = u
                        bad_v = v
                        break
                if bad_u >= 0:
                    break
        return (bad_u, bad_v) if bad_u >= 0 else None
    finally:
        free(cand)
        free(scratch)
        free(out)


def through_pairs(const uint64_t[:, ::1] adj, const int64_t[:, ::1] pairs, int k):
    """Boolean array: does pair i's common neighbourhood hold a (k-2)-clique."""
    cdef Py_ssize_t W = adj.shape[1], m = pairs.shape[0], p, i, lo, hi, u, v
    cdef uint64_t* cand
    cdef uint64_t* scratch
    cdef int* out
    result = np.zeros(m, dtype=np.uint8)
    cdef unsigned char[::1] res = result
    cand = <uint64_t*>malloc(W * sizeof(uint64_t))
    scratch = <uint64_t*>malloc(W * (k + 1) * sizeof(uint64_t))
    out = <int*>malloc((k + 1) * sizeof(int))
    try:
        with nogil:
            for p in range(m):
                u = pairs[p, 0]
                v = pairs[p, 1]
                if k <= 2:
                    res[p] = 1
                    continue
                lo = -1
                hi = 0
                for i in range(W):
                    cand[i] = adj[u, i] & adj[v, i]
                    if cand[i]:
                        if lo < 0:
                            lo = i
                        hi = i + 1
                res[p] = lo >= 0 and _search(&adj[0, 0], W, cand, lo, hi, k - 2, scratch, out)
        return result.astype(bool)
    finally:
        free(cand)
        free(scratch)
        free(out)
