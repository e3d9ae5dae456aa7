"""Pure-Python reference implementations of the hot kernels.

Same contracts as the compiled module ``superstring._kernels``; the
dispatcher in ``superstring.kernels`` picks whichever is available.
Results (including reconstructed permutations) are bit-identical across
the two backends.
"""

from __future__ import annotations

IMPLEMENTATION = "pure"

_INF = float("inf")


def overlap_len(s: bytes, t: bytes) -> int:
    """Length of the longest proper overlap: a suffix of ``s`` that is a
    prefix of ``t``, leaving a non-empty remainder on both sides.

    Computed with a prefix-function pass over ``t + NUL + s``; the NUL
    separator must not occur in either string.
    """
    ls, lt = len(s), len(t)
    cap = min(ls, lt) - 1
    if cap <= 0:
        return 0
    p = t + b"\x00" + s
    n = len(p)
    pi = [0] * n
    k = 0
    for i in range(1, n):
        c = p[i]
        while k > 0 and p[k] != c:
            k = pi[k - 1]
        if p[k] == c:
            k += 1
        pi[i] = k
    k = pi[n - 1]
    while k > cap:
        k = pi[k - 1]
    return k


def overlap_matrix(strs: list[bytes]) -> list[list[int]]:
    """All-pairs overlap lengths, diagonal included (self-overlap)."""
    return [[overlap_len(s, t) for t in strs] for s in strs]


def min_hamiltonian_path(edge_cost: list[list[int]], end_cost: list[int]) -> tuple[int, list[int]]:
    """Held-Karp over (visited-mask, last-node) states.

    Minimizes ``sum(edge_cost[a][b] for consecutive a,b) + end_cost[last]``
    over all orderings of 0..n-1.  Returns (value, order).  Ties are broken
    deterministically: strictly-better updates only, predecessors and final
    nodes scanned in ascending index order.
    """
    n = len(edge_cost)
    if n == 0:
        raise ValueError("empty cost matrix")
    if n == 1:
        return end_cost[0], [0]
    full = (1 << n) - 1
    size = (full + 1) * n
    best: list[float] = [_INF] * size
    parent = [-1] * size
    for v in range(n):
        best[(1 << v) * n + v] = 0
    for mask in range(1, full + 1):
        base = mask * n
        for last in range(n):
            if not (mask >> last) & 1:
                continue
            cur = best[base + last]
            if cur == _INF:
                continue
            row = edge_cost[last]
            rest = full ^ mask
            nxt = rest
            while nxt:
                v = (nxt & -nxt).bit_length() - 1
                nxt &= nxt - 1
                cand = cur + row[v]
                idx = (mask | (1 << v)) * n + v
                if cand < best[idx]:
                    best[idx] = cand
                    parent[idx] = last
    base = full * n
    best_val = _INF
    best_last = -1
    for v in range(n):
        cand = best[base + v] + end_cost[v]
        if cand < best_val:
            best_val = cand
            best_last = v
    order = [0] * n
    mask = full
    v = best_last
    for pos in range(n - 1, -1, -1):
        order[pos] = v
        p = parent[mask * n + v]
        mask ^= 1 << v
        v = p
    return int(best_val), order
