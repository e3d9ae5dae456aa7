# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: overlap lengths and the Held-Karp scan.

Mirrors ``superstring._kernels_py`` exactly, including tie-breaking, so
the two backends are interchangeable.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

IMPLEMENTATION = "compiled"

cdef long long INF = (<long long> 1) << 61


cdef int _overlap_len_c(const unsigned char* s, Py_ssize_t ls,
                        const unsigned char* t, Py_ssize_t lt) except -1:
    cdef Py_ssize_t cap = (ls if ls < lt else lt) - 1
    if cap <= 0:
        return 0
    cdef Py_ssize_t n = ls + lt + 1
    cdef unsigned char* p = <unsigned char*> malloc(n)
    cdef int* pi = <int*> malloc(n * sizeof(int))
    if p == NULL or pi == NULL:
        free(p)
        free(pi)
        raise MemoryError()
    memcpy(p, t, lt)
    p[lt] = 0
    memcpy(p + lt + 1, s, ls)
    cdef Py_ssize_t i
    cdef int k = 0
    pi[0] = 0
    for i in range(1, n):
        while k > 0 and p[k] != p[i]:
            k = pi[k - 1]
        if p[k] == p[i]:
            k += 1
        pi[i] = k
    k = pi[n - 1]
    while k > cap:
        k = pi[k - 1]
    free(p)
    free(pi)
    return k


def overlap_len(bytes s, bytes t):
    """Length of the longest proper overlap of the ordered pair (s, t)."""
    return _overlap_len_c(<const unsigned char*> s, len(s),
                          <const unsigned char*> t, len(t))


def overlap_matrix(list strs):
    """All-pairs overlap lengths, diagonal included."""
    cdef Py_ssize_t n = len(strs)
    cdef Py_ssize_t i, j
    out = []
    for i in range(n):
        row = []
        si = strs[i]
        for j in range(n):
            row.append(_overlap_len_c(<const unsigned char*> si, len(<bytes> si),
                                      <const unsigned char*> (<bytes> strs[j]),
                                      len(<bytes> strs[j])))
        out.append(row)
    return out


def min_hamiltonian_path(edge_cost, end_cost):
    """Held-Karp over (visited-mask, last-node) states; see the pure
    backend for the contract."""
    cdef Py_ssize_t n = len(edge_cost)
    if n == 0:
        raise ValueError("empty cost matrix")
    if n > 24:
        raise ValueError("mask width exceeded")
    if n == 1:
        return end_cost[0], [0]
    cdef Py_ssize_t full = (1 << n) - 1
    cdef Py_ssize_t size = (full + 1) * n
    cdef long long* best = <long long*> malloc(size * sizeof(long long))
    cdef signed char* parent = <signed char*> malloc(size)
    cdef long long* cost = <long long*> malloc(n * n * sizeof(long long))
    cdef long long* endc = <long long*> malloc(n * sizeof(long long))
    if best == NULL or parent == NULL or cost == NULL or endc == NULL:
        free(best)
        free(parent)
        free(cost)
        free(endc)
        raise MemoryError()
    cdef Py_ssize_t i, j, v, last, mask, rest, idx
    cdef long long cur, cand
    cdef long long best_val = INF
    cdef Py_ssize_t best_last = -1
    try:
        for i in range(n):
            endc[i] = end_cost[i]
            row = edge_cost[i]
            for j in range(n):
                cost[i * n + j] = row[j]
        for idx in range(size):
            best[idx] = INF
            parent[idx] = -1
        for v in range(n):
            best[(1 << v) * n + v] = 0
        for mask in range(1, full + 1):
            for last in range(n):
                if not (mask >> last) & 1:
                    continue
                cur = best[mask * n + last]
                if cur >= INF:
                    continue
                rest = full ^ mask
                v = 0
                while rest:
                    if rest & 1:
                        cand = cur + cost[last * n + v]
                        idx = (mask | (1 << v)) * n + v
                        if cand < best[idx]:
                            best[idx] = cand
                            parent[idx] = <signed char> last
                    rest >>= 1
                    v += 1
        for v in range(n):
            cand = best[full * n + v] + endc[v]
            if cand < best_val:
                best_val = cand
                best_last = v
        order = [0] * n
        mask = full
        v = best_last
        for i in range(n - 1, -1, -1):
            order[i] = v
            last = parent[mask * n + v]
            mask ^= 1 << v
            v = last
        return best_val, order
    finally:
        free(best)
        free(parent)
        free(cost)
        free(endc)
