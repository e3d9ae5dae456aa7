"""Instance generators: the adversarial families, random instances, and
the sentinel transformation that forces a unique greedy merge order while
preserving per-symbol overlap structure.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvalidInputError, ParamSearchExhausted, SuperstringError
from .solvers import Solution
from .strings import (
    Instance,
    count_occurrences,
    merge,
    normalize,
    overlap_length,
    split,
)

FAMILY_NAMES = ("intro", "lga_pair", "lga3", "lga3_ext", "uniform25", "fig1", "fig2")

_UNIFORM25 = ("aaaab", "aaabaa", "aabaaba", "baabaa", "abaaaa")
_FIG1 = ("baacabbcaacb", "bcaacbacaaabca")
_FIG2 = ("ABE", "DAB", "DFA", "ACB", "ECA", "CBD")


@dataclass(frozen=True)
class FamilySpec:
    name: str
    n: Optional[int] = None


def gen_family(spec: FamilySpec | str, n: Optional[int] = None) -> Instance:
    """Build one of the named instance families; parametric families
    substitute ``n``."""
    if isinstance(spec, str):
        spec = FamilySpec(spec, n)
    name, n = spec.name, spec.n
    if name not in FAMILY_NAMES:
        raise InvalidInputError(f"unknown family {name!r}; known: {FAMILY_NAMES}")
    if name == "uniform25":
        return Instance(_UNIFORM25)
    if name == "fig1":
        return Instance(_FIG1)
    if name == "fig2":
        return Instance(_FIG2)
    if n is None or n < 1:
        raise InvalidInputError(f"family {name!r} needs a parameter n >= 1")
    b = "b" * n
    if name == "intro":
        return Instance(("a" + b, "b" * (n + 1), b + "c"))
    if name == "lga_pair":
        return Instance(("a" + b, b + "a"))
    if name == "lga3":
        return Instance(("a" + b, "b" * (n + 1), b + "c", "b" * (n - 1) + "cc"))
    if name == "lga3_ext":
        if n < 2:
            raise InvalidInputError("lga3_ext needs n >= 2")
        return Instance(
            ("a" + b, "b" * (n + 1), b + "c", "b" * (n - 1) + "cc", "b" * (n - 2) + "ccc")
        )
    raise AssertionError(name)


def random_instance(seed: int, count: int, max_len: int, alphabet_size: int) -> Instance:
    """Deterministic random instance: ``count`` uniform strings (length
    uniform in 1..max_len) over the first ``alphabet_size`` letters, then
    normalized, so the result may hold fewer than ``count`` strings."""
    if count < 1 or max_len < 1 or alphabet_size < 1 or alphabet_size > 26:
        raise InvalidInputError("need count >= 1, max_len >= 1, 1 <= alphabet_size <= 26")
    rng = random.Random(seed)
    alphabet = "abcdefghijklmnopqrstuvwxyz"[:alphabet_size]
    raw = [
        "".join(rng.choice(alphabet) for _ in range(rng.randint(1, max_len)))
        for _ in range(count)
    ]
    return normalize(raw)


# ---------------------------------------------------------------------------
# Sentinel transformation


@dataclass(frozen=True)
class SentinelParams:
    m: int
    alphas: tuple[int, ...]
    betas: tuple[int, ...]
    sentinel: str = "$"

    def __post_init__(self) -> None:
        if self.m < 1:
            raise InvalidInputError("m must be >= 1")
        if len(self.sentinel) != 1:
            raise InvalidInputError("sentinel must be a single symbol")
        for arr, label in ((self.alphas, "alpha"), (self.betas, "beta")):
            if any(x < 0 or x >= self.m for x in arr):
                raise InvalidInputError(f"every {label} must lie in 0..m-1")

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "alphas": list(self.alphas),
            "betas": list(self.betas),
            "sentinel": self.sentinel,
        }


def _pad(s: str, alpha: int, beta: int, m: int, sentinel: str) -> str:
    body = (sentinel * m).join(s)
    return sentinel * (m - alpha) + body + sentinel * beta


def sentinelize(inst: Instance, params: SentinelParams) -> Instance:
    """Pad every string with sentinel blocks: ``m - alpha_i`` sentinels up
    front, ``m`` between symbols, ``beta_i`` at the end.

    Verified after construction: for every original symbol, string and
    pairwise-overlap counts are unchanged.
    """
    n = inst.n
    if len(params.alphas) != n or len(params.betas) != n:
        raise InvalidInputError("parameter vectors must match the instance size")
    if params.sentinel in "".join(inst.strings):
        raise InvalidInputError(f"sentinel {params.sentinel!r} occurs in the instance")
    padded = tuple(
        _pad(s, params.alphas[i], params.betas[i], params.m, params.sentinel)
        for i, s in enumerate(inst.strings)
    )
    out = Instance(padded, allow_sentinel=True)
    for sym in inst.alphabet:
        for i, s in enumerate(inst.strings):
            if count_occurrences(padded[i], sym) != count_occurrences(s, sym):
                raise SuperstringError("sentinel padding changed a symbol count")
            for j, t in enumerate(inst.strings):
                if count_occurrences(split(padded[i], padded[j]).ov, sym) != count_occurrences(
                    split(s, t).ov, sym
                ):
                    raise SuperstringError("sentinel padding changed an overlap count")
    return out


# ---------------------------------------------------------------------------
# Forced-greedy verification


def _forced_merges(strings: Sequence[str]) -> tuple[bool, list[tuple[int, int]]]:
    """Run greedy merging while the maximal overlap is positive, requiring
    a unique argmax pair at every such step.  Returns (forced, merges as
    pool-position pairs at each step)."""
    values = list(strings)
    merges: list[tuple[int, int]] = []
    while len(values) > 1:
        best = 0
        arg = None
        tie = False
        for i, s in enumerate(values):
            for j, t in enumerate(values):
                if i == j:
                    continue
                k = overlap_length(s, t)
                if k > best:
                    best, arg, tie = k, (i, j), False
                elif k == best and best > 0:
                    tie = True
        if best == 0:
            return True, merges
        if tie:
            return False, merges
        i, j = arg  # type: ignore[misc]
        merges.append((i, j))
        merged = merge(values[i], values[j])
        values = [values[k] for k in range(len(values)) if k not in (i, j)] + [merged]
    return True, merges


def is_greedy_forced(inst: Instance) -> bool:
    """True iff every greedy step with positive maximal overlap has a
    unique argmax pair (all instantiations coincide up to trivial merges)."""
    return _forced_merges(inst.strings)[0]


# ---------------------------------------------------------------------------
# Parameter search


def _as_log(target) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
    if isinstance(target, Solution):
        entries = target.merge_log
    else:
        entries = target
    return [(tuple(l), tuple(r), int(ov)) for l, r, ov in entries]


def _validate_target(inst: Instance, log) -> None:
    pool: dict[tuple[int, ...], str] = {(i,): s for i, s in enumerate(inst.strings)}
    prev_positive = True
    for lseq, rseq, ov in log:
        if lseq not in pool or rseq not in pool or lseq == rseq:
            raise InvalidInputError("target log references unknown pool strings")
        best = max(
            overlap_length(pool[a], pool[b])
            for a in pool
            for b in pool
            if a != b
        )
        got = overlap_length(pool[lseq], pool[rseq])
        if got != ov or got != best:
            raise InvalidInputError("target log is not a valid greedy run")
        if got > 0 and not prev_positive:
            raise InvalidInputError("positive merge after a trivial merge in target")
        prev_positive = got > 0
        merged = merge(pool.pop(lseq), pool.pop(rseq))
        pool[lseq + rseq] = merged
    if len(pool) != 1:
        raise InvalidInputError("target log must merge down to one string")


class _ChainState:
    """One pool state along the target's positive-merge prefix, with the
    base border structure of every ordered pair precomputed."""

    __slots__ = ("seqs", "values", "firsts", "lasts", "pair_borders", "expected")

    def __init__(self, seqs, values, expected):
        self.seqs = seqs
        self.values = values
        self.firsts = [seq[0] for seq in seqs]
        self.lasts = [seq[-1] for seq in seqs]
        self.expected = expected  # pool-position pair or None for the final state
        self.pair_borders = {}
        for a, s in enumerate(values):
            for b, t in enumerate(values):
                if a != b:
                    self.pair_borders[(a, b)] = _borders(s, t)


def _borders(s: str, t: str) -> list[tuple[int, bool, bool]]:
    out = []
    for k in range(min(len(s), len(t)), 0, -1):
        if s[-k:] == t[:k]:
            out.append((k, k == len(s), k == len(t)))
    return out


def _build_chain(inst: Instance, positive_log) -> list[_ChainState]:
    seqs = [(i,) for i in range(inst.n)]
    values = list(inst.strings)
    chain = []
    for lseq, rseq, _ in positive_log:
        i, j = seqs.index(lseq), seqs.index(rseq)
        chain.append(_ChainState(list(seqs), list(values), (i, j)))
        merged_seq, merged_val = lseq + rseq, merge(values[i], values[j])
        seqs = [seqs[k] for k in range(len(seqs)) if k not in (i, j)] + [merged_seq]
        values = [values[k] for k in range(len(values)) if k not in (i, j)] + [merged_val]
    chain.append(_ChainState(list(seqs), list(values), None))
    return chain


def _simulate_candidate(chain, m: int, alphas, betas, sentinel: str) -> bool:
    """Exact fast check of one (m, alphas, betas) candidate.

    Padded-string overlaps are computed arithmetically from the base
    border structure: a border of k symbols contributes k*(m+1) + beta_u -
    alpha_v (full-string borders need alpha_v > alpha_u resp. beta_u <
    beta_v to leave non-empty remainders), and the sentinel-only overlap
    is min(beta_u, m - alpha_v).
    """
    state = 0
    last = len(chain) - 1
    while True:
        st = chain[state]
        firsts, lasts = st.firsts, st.lasts
        best = 0
        best_pair = None
        best_is_base = False
        tie = False
        for (a, b), ks in st.pair_borders.items():
            beta_u = betas[lasts[a]]
            alpha_v = alphas[firsts[b]]
            val = 0
            is_base = False
            for k, full_u, full_v in ks:
                if full_u and not alphas[firsts[a]] < alpha_v:
                    continue
                if full_v and not beta_u < betas[lasts[b]]:
                    continue
                val = k * (m + 1) + beta_u - alpha_v
                is_base = True
                break
            if not is_base:
                val = min(beta_u, m - alpha_v)
            if val > best:
                best, best_pair, best_is_base, tie = val, (a, b), is_base, False
            elif val == best and val > 0:
                tie = True
        if best == 0:
            return state == last
        if tie:
            return False
        if best_is_base:
            if state == last or best_pair != st.expected:
                return False
            state += 1
            continue
        if state != last:
            return False
        return _simulate_tail(chain[last], m, alphas, betas, sentinel)


def _simulate_tail(st: _ChainState, m: int, alphas, betas, sentinel: str) -> bool:
    # Sentinel-only merges change the padding structure, so finish the
    # forced run on materialized strings.
    values = [
        _pad(v, alphas[st.firsts[i]], betas[st.lasts[i]], m, sentinel)
        for i, v in enumerate(st.values)
    ]
    forced, _ = _forced_merges(values)
    return forced


def _verify_params(inst: Instance, params: SentinelParams, positive_log) -> bool:
    """Authoritative check on real strings: the forced run must exist, its
    base-positive merges must reproduce the target's positive prefix in
    order, and no base-positive merge may follow a base-trivial one."""
    padded = sentinelize(inst, params)
    seqs = [(i,) for i in range(inst.n)]
    values = list(padded.strings)
    expected = [(l, r) for l, r, _ in positive_log]
    pos = 0
    seen_base_zero = False
    while len(values) > 1:
        best, arg, tie = 0, None, False
        for i, s in enumerate(values):
            for j, t in enumerate(values):
                if i == j:
                    continue
                k = overlap_length(s, t)
                if k > best:
                    best, arg, tie = k, (i, j), False
                elif k == best and best > 0:
                    tie = True
        if best == 0:
            break
        if tie:
            return False
        i, j = arg  # type: ignore[misc]
        ov = split(values[i], values[j]).ov
        base_k = len(ov.replace(params.sentinel, ""))
        if base_k > 0:
            if seen_base_zero or pos >= len(expected) or (seqs[i], seqs[j]) != expected[pos]:
                return False
            pos += 1
        else:
            seen_base_zero = True
        merged_seq, merged_val = seqs[i] + seqs[j], merge(values[i], values[j])
        seqs = [seqs[k] for k in range(len(seqs)) if k not in (i, j)] + [merged_seq]
        values = [values[k] for k in range(len(values)) if k not in (i, j)] + [merged_val]
    return pos == len(expected)


def find_sentinel_params(
    inst: Instance,
    target,
    sentinel: str = "$",
    m_max: Optional[int] = None,
    max_candidates: int = 2_000_000,
) -> SentinelParams:
    """Search (m increasing, then lexicographic distinct alpha and beta
    assignments) for padding parameters under which greedy merging is
    forced and reproduces the target's positive merges.

    Exhausting the budget raises; that is not a non-existence proof.
    """
    log = _as_log(target)
    _validate_target(inst, log)
    positive_log = [e for e in log if e[2] > 0]
    n = inst.n
    if m_max is None:
        m_max = max(1, 4 * n * n)
    chain = _build_chain(inst, positive_log)
    tried = 0
    for m in range(1, m_max + 1):
        for alphas in itertools.permutations(range(m), n):
            for betas in itertools.permutations(range(m), n):
                tried += 1
                if tried > max_candidates:
                    raise ParamSearchExhausted(
                        f"no parameters within {max_candidates} candidates (m <= {m})"
                    )
                if not _simulate_candidate(chain, m, alphas, betas, sentinel):
                    continue
                params = SentinelParams(m, alphas, betas, sentinel)
                if _verify_params(inst, params, positive_log):
                    return params
    raise ParamSearchExhausted(f"no parameters with m <= {m_max}")
