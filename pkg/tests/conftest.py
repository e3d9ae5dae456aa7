"""Shared fixtures and independent brute-force oracles.

Every oracle here recomputes from first principles (plain scans over all
suffix lengths, permutations, or bijections) so the fast implementations
are checked against a separate route.
"""

from __future__ import annotations

import itertools

import pytest
from hypothesis import HealthCheck, settings

from superstring import Instance, gen_family, normalize

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")


# ---------------------------------------------------------------------------
# Brute-force oracles


def brute_overlap(s: str, t: str) -> str:
    """Longest y with s = x+y, t = y+z, x and z non-empty, by scanning
    every suffix length."""
    for k in range(min(len(s) - 1, len(t) - 1), 0, -1):
        if s[len(s) - k :] == t[:k]:
            return t[:k]
    return ""


def brute_merge(s: str, t: str) -> str:
    y = brute_overlap(s, t)
    return s + t[len(y) :]


def fold_merge_length(inst: Instance, perm) -> int:
    out = inst.strings[perm[0]]
    for i in perm[1:]:
        out = brute_merge(out, inst.strings[i])
    return len(out)


def brute_exact_scs_length(inst: Instance) -> int:
    return min(fold_merge_length(inst, p) for p in itertools.permutations(range(inst.n)))


def brute_exact_sigma(inst: Instance, sym: str) -> int:
    best = None
    for perm in itertools.permutations(range(inst.n)):
        total = 0
        for a, b in zip(perm, perm[1:]):
            s, t = inst.strings[a], inst.strings[b]
            y = brute_overlap(s, t)
            total += s[: len(s) - len(y)].count(sym)
        total += inst.strings[perm[-1]].count(sym)
        if best is None or total < best:
            best = total
    return best


def brute_max_cover_weight(edge_weights) -> int:
    n = len(edge_weights)
    return max(
        sum(edge_weights[u][perm[u]] for u in range(n))
        for perm in itertools.permutations(range(n))
    )


def brute_shp_length(node_weights, edge_weights) -> int:
    n = len(node_weights)
    best = None
    for perm in itertools.permutations(range(n)):
        val = sum(node_weights) - sum(
            edge_weights[a][b] for a, b in zip(perm, perm[1:])
        )
        if best is None or val < best:
            best = val
    return best


def all_superstrings(inst: Instance, max_len: int) -> list[str]:
    """Every string over the instance alphabet, up to max_len, containing
    all instance strings."""
    alphabet = inst.alphabet
    out = []
    frontier = [""]
    for _ in range(max_len):
        frontier = [s + c for s in frontier for c in alphabet]
        out.extend(s for s in frontier if all(x in s for x in inst.strings))
    return out


# ---------------------------------------------------------------------------
# Fixtures


@pytest.fixture(scope="session")
def fig1():
    return gen_family("fig1")


@pytest.fixture(scope="session")
def fig2():
    return gen_family("fig2")


@pytest.fixture(scope="session")
def uniform25():
    return gen_family("uniform25")


@pytest.fixture()
def tiny():
    return normalize(["abbb", "bbbb", "bbbc"])
