"""The algorithm suite: edge-scan PATH/CYC with full traces, greedy and
locally greedy merging on strings, exact Held-Karp oracles, instantiation
enumeration, and trace diagnostics.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import kernels
from .errors import CapacityError, InvalidInputError
from .graphs import (
    BRUTE_FORCE_COVER_LIMIT,
    CycleCover,
    EdgeRef,
    PropertyReport,
    WeightedDigraph,
    brute_force_max_cover,
    check_properties,
    cover_weight,
    overlap_graph,
    sigma_graph,
    subgraph_length,
)
from .strings import (
    Instance,
    count_occurrences,
    merge,
    overlap_length,
    split,
    superstring_of_permutation,
)

EXACT_LIMIT = 20
ANALYZE_LIMIT = 15


# ---------------------------------------------------------------------------
# Edge processing orders


@dataclass(frozen=True)
class OrderPolicy:
    """Processing order for the n^2 edges of a complete digraph.

    ``lex`` and ``seeded`` sort by weight descending (lexicographic or
    seeded-random inside equal-weight groups), which always respects
    dominance.  ``explicit`` accepts any order in which no edge is
    processed after an edge it strictly dominates; that is weaker than
    globally descending weights and is what merge-log replays need.

    When the scan cannot include self-loops (PATH rejects them for cycle
    formation regardless of position), ordering constraints involving a
    self-loop are waived for explicit orders: a self-loop's position can
    never change the included set, and merge-log replays of locally
    greedy runs are inexpressible otherwise because local dominance never
    consults self-overlaps.
    """

    kind: str
    seed: Optional[int] = None
    edges: Optional[tuple[tuple[int, int], ...]] = None

    @classmethod
    def lex(cls) -> "OrderPolicy":
        return cls("lex")

    @classmethod
    def seeded(cls, seed: int) -> "OrderPolicy":
        return cls("seeded", seed=seed)

    @classmethod
    def explicit(cls, edges: Sequence[tuple[int, int]]) -> "OrderPolicy":
        return cls("explicit", edges=tuple((u, v) for u, v in edges))

    def order_for(self, g: WeightedDigraph, exempt_self_loops: bool = False) -> list[EdgeRef]:
        n = g.n
        if self.kind == "lex":
            return sorted(g.all_edges(), key=lambda e: (-e.weight, e.tail, e.head))
        if self.kind == "seeded":
            rng = random.Random(self.seed)
            groups: dict[int, list[EdgeRef]] = {}
            for e in g.all_edges():
                groups.setdefault(e.weight, []).append(e)
            out: list[EdgeRef] = []
            for w in sorted(groups, reverse=True):
                block = sorted(groups[w], key=lambda e: (e.tail, e.head))
                rng.shuffle(block)
                out.extend(block)
            return out
        if self.kind == "explicit":
            if self.edges is None:
                raise InvalidInputError("explicit policy without edges")
            order = [g.edge(u, v) for u, v in self.edges]
            if len(order) != n * n or len(set((e.tail, e.head) for e in order)) != n * n:
                raise InvalidInputError("explicit order must list every edge exactly once")
            _validate_dominance_respecting(order, exempt_self_loops)
            return order
        raise InvalidInputError(f"unknown policy kind {self.kind!r}")


def _validate_dominance_respecting(order: Sequence[EdgeRef], exempt_self_loops: bool) -> None:
    # No edge may appear after an edge it strictly dominates: weights must
    # be non-increasing along every same-tail and same-head subsequence.
    last_tail: dict[int, int] = {}
    last_head: dict[int, int] = {}
    for e in order:
        if exempt_self_loops and e.tail == e.head:
            continue
        if e.weight > last_tail.get(e.tail, e.weight) or e.weight > last_head.get(
            e.head, e.weight
        ):
            raise InvalidInputError(
                f"order is not dominance respecting at edge ({e.tail},{e.head})"
            )
        last_tail[e.tail] = e.weight
        last_head[e.head] = e.weight


# ---------------------------------------------------------------------------
# PATH and CYC


@dataclass(frozen=True)
class HamPath:
    order: tuple[int, ...]


@dataclass(frozen=True)
class PathTrace:
    """Full record of one PATH scan.

    ``bad_back_edges`` pairs each edge rejected for cycle formation with
    the interval [i, j] it spans in final-path coordinates.  ``culprits``
    are the innermost such intervals, aligned index-wise with
    ``culprit_back_edges``.  Removing the weak links (last-included edge
    between successive culprits) splits the path into blocks, giving the
    left / middle / right node classes.
    """

    order: tuple[int, ...]
    included: tuple[EdgeRef, ...]
    rejected: tuple[tuple[EdgeRef, str], ...]
    bad_back_edges: tuple[tuple[EdgeRef, tuple[int, int]], ...]
    culprits: tuple[tuple[int, int], ...]
    culprit_back_edges: tuple[EdgeRef, ...]
    weak_links: tuple[EdgeRef, ...]
    v_left: frozenset[int]
    v_middle: frozenset[int]
    v_right: frozenset[int]


def _scan(g: WeightedDigraph, policy: OrderPolicy, use_r2: bool):
    """Shared edge scan.  R1 rejects edges dominated by a chosen edge
    (shared tail or head, no smaller weight); with ``use_r2`` the scan
    additionally rejects edges closing a path cycle, otherwise every node
    ends with in- and out-degree one (a cycle cover)."""
    n = g.n
    order = policy.order_for(g, exempt_self_loops=use_r2)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen_out: list[Optional[EdgeRef]] = [None] * n
    chosen_in: list[Optional[EdgeRef]] = [None] * n
    included: list[EdgeRef] = []
    rejected: list[tuple[EdgeRef, str]] = []
    r2_edges: list[EdgeRef] = []
    for e in order:
        du, dv = chosen_out[e.tail], chosen_in[e.head]
        if (du is not None and du.weight >= e.weight) or (
            dv is not None and dv.weight >= e.weight
        ):
            rejected.append((e, "R1"))
            continue
        if use_r2 and find(e.tail) == find(e.head):
            rejected.append((e, "R2"))
            r2_edges.append(e)
            continue
        # An occupied endpoint without dominance would mean the order was
        # not dominance respecting for an includable edge.
        assert du is None and dv is None, "undominated edge with occupied endpoint"
        chosen_out[e.tail] = e
        chosen_in[e.head] = e
        if use_r2:
            parent[find(e.tail)] = find(e.head)
        included.append(e)
    return included, rejected, r2_edges, chosen_out, chosen_in


def cyc(g: WeightedDigraph, policy: Optional[OrderPolicy] = None) -> CycleCover:
    """Greedy cycle cover: the PATH scan with only the dominance rule."""
    policy = policy or OrderPolicy.lex()
    included, _, _, chosen_out, _ = _scan(g, policy, use_r2=False)
    assert len(included) == g.n
    successor = tuple(chosen_out[u].head for u in range(g.n))  # type: ignore[union-attr]
    return CycleCover(successor)


def path(g: WeightedDigraph, policy: Optional[OrderPolicy] = None) -> tuple[HamPath, PathTrace]:
    """Dominance-ordered edge scan building a Hamiltonian path, with the
    full trace needed by the diagnostics."""
    policy = policy or OrderPolicy.lex()
    n = g.n
    if n == 1:
        # No merge decisions exist; the lone self-loop is unprocessable.
        empty = PathTrace(
            order=(0,),
            included=(),
            rejected=(),
            bad_back_edges=(),
            culprits=(),
            culprit_back_edges=(),
            weak_links=(),
            v_left=frozenset({0}),
            v_middle=frozenset(),
            v_right=frozenset(),
        )
        return HamPath((0,)), empty
    included, rejected, r2_edges, chosen_out, chosen_in = _scan(g, policy, use_r2=True)
    assert len(included) == n - 1

    starts = [v for v in range(n) if chosen_in[v] is None]
    assert len(starts) == 1
    order_nodes = [starts[0]]
    while chosen_out[order_nodes[-1]] is not None:
        order_nodes.append(chosen_out[order_nodes[-1]].head)  # type: ignore[union-attr]
    assert len(order_nodes) == n
    pos = {v: i for i, v in enumerate(order_nodes)}

    include_time = {(e.tail, e.head): i for i, e in enumerate(included)}

    bad_back = []
    for e in r2_edges:
        i, j = pos[e.head], pos[e.tail]
        assert i <= j
        bad_back.append((e, (i, j)))

    intervals = [iv for _, iv in bad_back]
    culprits = tuple(
        sorted(
            iv
            for iv in intervals
            if not any(other != iv and iv[0] <= other[0] and other[1] <= iv[1] for other in intervals)
        )
    )
    by_interval = {iv: e for e, iv in bad_back}
    culprit_back_edges = tuple(by_interval[iv] for iv in culprits)

    weak_links: list[EdgeRef] = []
    for (_, j_prev), (i_next, _) in zip(culprits, culprits[1:]):
        between = [
            (include_time[(order_nodes[t], order_nodes[t + 1])], t)
            for t in range(j_prev, i_next)
        ]
        _, t_last = max(between)
        weak_links.append(included[include_time[(order_nodes[t_last], order_nodes[t_last + 1])]])

    v_left: set[int] = set()
    v_middle: set[int] = set()
    v_right: set[int] = set()
    if not culprits:
        v_left = set(range(n))
    else:
        cuts = [pos[e.tail] for e in weak_links]  # block k ends at cut position
        block_start = 0
        for k, (ci, cj) in enumerate(culprits):
            block_end = cuts[k] if k < len(cuts) else n - 1
            for t in range(block_start, block_end + 1):
                if t < ci:
                    v_left.add(order_nodes[t])
                elif t <= cj:
                    v_middle.add(order_nodes[t])
                else:
                    v_right.add(order_nodes[t])
            block_start = block_end + 1

    trace = PathTrace(
        order=tuple(order_nodes),
        included=tuple(included),
        rejected=tuple(rejected),
        bad_back_edges=tuple(bad_back),
        culprits=culprits,
        culprit_back_edges=culprit_back_edges,
        weak_links=tuple(weak_links),
        v_left=frozenset(v_left),
        v_middle=frozenset(v_middle),
        v_right=frozenset(v_right),
    )
    return HamPath(tuple(order_nodes)), trace


# ---------------------------------------------------------------------------
# Exact oracles


def _overlap_matrix(strings: Sequence[str]) -> list[list[int]]:
    return kernels.overlap_matrix([s.encode("ascii") for s in strings])


def shortest_hamiltonian_path_length(g: WeightedDigraph) -> int:
    """Minimum, over Hamiltonian paths, of node weights minus edge weights."""
    if g.n > EXACT_LIMIT:
        raise CapacityError(f"exact Hamiltonian path limited to n <= {EXACT_LIMIT}")
    neg = [[-w for w in row] for row in g.edge_weights]
    value, _ = kernels.min_hamiltonian_path(neg, [0] * g.n)
    return sum(g.node_weights) + value


@dataclass(frozen=True)
class Solution:
    """A superstring together with how it was assembled."""

    perm: tuple[int, ...]
    superstring: str
    length: int
    compression: int
    per_symbol: dict[str, int]
    merge_log: tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]

    def to_json(self) -> dict:
        return {
            "perm": list(self.perm),
            "superstring": self.superstring,
            "length": self.length,
            "compression": self.compression,
            "per_symbol": dict(sorted(self.per_symbol.items())),
            "merge_log": [
                {"left": list(l), "right": list(r), "overlap": ov}
                for l, r, ov in self.merge_log
            ],
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _build_solution(inst: Instance, perm, superstring: str, log) -> Solution:
    perm = tuple(perm)
    # Consistency guards: the folded string must match the permutation
    # identity and contain every input.
    assert superstring_of_permutation(inst, perm) == superstring
    assert all(s in superstring for s in inst.strings)
    length = len(superstring)
    per_symbol = {c: count_occurrences(superstring, c) for c in inst.alphabet}
    assert sum(per_symbol.values()) == length
    return Solution(
        perm=perm,
        superstring=superstring,
        length=length,
        compression=inst.total_length() - length,
        per_symbol=per_symbol,
        merge_log=tuple((tuple(l), tuple(r), ov) for l, r, ov in log),
    )


def exact_scs(inst: Instance) -> Solution:
    """Shortest superstring via Held-Karp over (subset, last) states."""
    if inst.n > EXACT_LIMIT:
        raise CapacityError(f"exact oracle limited to n <= {EXACT_LIMIT}")
    ov = _overlap_matrix(inst.strings)
    neg = [[-w for w in row] for row in ov]
    _, perm = kernels.min_hamiltonian_path(neg, [0] * inst.n)
    log = []
    seq = (perm[0],)
    out = inst.strings[perm[0]]
    for idx in perm[1:]:
        k = overlap_length(out, inst.strings[idx])
        log.append((seq, (idx,), k))
        out = merge(out, inst.strings[idx])
        seq = seq + (idx,)
    return _build_solution(inst, perm, out, log)


def exact_sigma(inst: Instance, sym: str) -> tuple[int, tuple[int, ...]]:
    """Minimum per-symbol count achievable by any superstring.

    Over permutations this minimizes the symbol count of the prefix parts
    plus the final string; ordering the strings of an arbitrary superstring
    by leftmost occurrence shows the permutation minimum lower-bounds every
    superstring (validated by brute force in the tests).
    """
    if inst.n > EXACT_LIMIT:
        raise CapacityError(f"exact oracle limited to n <= {EXACT_LIMIT}")
    n = inst.n
    cost = [[0] * n for _ in range(n)]
    for i, s in enumerate(inst.strings):
        for j, t in enumerate(inst.strings):
            cost[i][j] = count_occurrences(split(s, t).pref, sym)
    end_cost = [count_occurrences(s, sym) for s in inst.strings]
    value, perm = kernels.min_hamiltonian_path(cost, end_cost)
    return value, tuple(perm)


# ---------------------------------------------------------------------------
# Greedy merging on strings


@dataclass(frozen=True)
class TieBreaker:
    """Deterministic choice among equally acceptable merge pairs.

    ``lex`` picks the pair whose string values are smallest; ``seeded``
    draws uniformly with a fixed seed; ``prefer`` consults an ordered list
    of (left, right) string values first, falling back to lex.
    """

    kind: str = "lex"
    seed: Optional[int] = None
    prefs: tuple[tuple[str, str], ...] = ()

    @classmethod
    def lex(cls) -> "TieBreaker":
        return cls("lex")

    @classmethod
    def seeded(cls, seed: int) -> "TieBreaker":
        return cls("seeded", seed=seed)

    @classmethod
    def prefer(cls, pairs: Sequence[tuple[str, str]]) -> "TieBreaker":
        return cls("prefer", prefs=tuple(pairs))

    def sequencer(self) -> Callable[[list[tuple[int, int]], list[str]], tuple[int, int]]:
        if self.kind == "seeded":
            rng = random.Random(self.seed)

            def choose_seeded(cands, values):
                cands = sorted(cands, key=lambda ij: (values[ij[0]], values[ij[1]]))
                return cands[rng.randrange(len(cands))]

            return choose_seeded
        if self.kind == "prefer":
            prefs = self.prefs

            def choose_prefer(cands, values):
                by_value = {(values[i], values[j]): (i, j) for i, j in cands}
                for pair in prefs:
                    if pair in by_value:
                        return by_value[pair]
                return min(cands, key=lambda ij: (values[ij[0]], values[ij[1]]))

            return choose_prefer
        if self.kind == "lex":
            return lambda cands, values: min(
                cands, key=lambda ij: (values[ij[0]], values[ij[1]])
            )
        raise InvalidInputError(f"unknown tie breaker {self.kind!r}")


def _pool_overlaps(values: list[str]) -> list[list[int]]:
    return _overlap_matrix(values)


def _greedy_candidates(ov: list[list[int]]) -> list[tuple[int, int]]:
    n = len(ov)
    best = max(ov[i][j] for i in range(n) for j in range(n) if i != j)
    return [(i, j) for i in range(n) for j in range(n) if i != j and ov[i][j] == best]


def _locally_greedy_candidates(ov: list[list[int]]) -> list[tuple[int, int]]:
    n = len(ov)
    row_max = [max(ov[i][t] for t in range(n) if t != i) for i in range(n)]
    col_max = [max(ov[s][j] for s in range(n) if s != j) for j in range(n)]
    return [
        (i, j)
        for i in range(n)
        for j in range(n)
        if i != j and ov[i][j] == row_max[i] and ov[i][j] == col_max[j]
    ]


def _run_merging(inst: Instance, candidates_fn, tie: Optional[TieBreaker]) -> Solution:
    choose = (tie or TieBreaker.lex()).sequencer()
    seqs: list[tuple[int, ...]] = [(i,) for i in range(inst.n)]
    values: list[str] = list(inst.strings)
    log = []
    while len(values) > 1:
        ov = _pool_overlaps(values)
        i, j = choose(candidates_fn(ov), values)
        log.append((seqs[i], seqs[j], ov[i][j]))
        merged_seq = seqs[i] + seqs[j]
        merged_val = merge(values[i], values[j])
        keep = [k for k in range(len(values)) if k not in (i, j)]
        seqs = [seqs[k] for k in keep] + [merged_seq]
        values = [values[k] for k in keep] + [merged_val]
    return _build_solution(inst, seqs[0], values[0], log)


def greedy_scs(inst: Instance, tie: Optional[TieBreaker] = None) -> Solution:
    """Repeatedly merge an ordered pair with globally maximal overlap."""
    return _run_merging(inst, _greedy_candidates, tie)


def locally_greedy_scs(inst: Instance, selector: Optional[TieBreaker] = None) -> Solution:
    """Repeatedly merge an ordered pair (s, t) whose overlap is maximal
    among pairs sharing its left string or its right string."""
    return _run_merging(inst, _locally_greedy_candidates, selector)


# ---------------------------------------------------------------------------
# Instantiation enumeration


@dataclass(frozen=True)
class EnumerationResult:
    solutions: tuple[Solution, ...]
    complete: bool
    states_expanded: int

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(sorted({s.length for s in self.solutions}))

    def max_per_symbol(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for s in self.solutions:
            for sym, c in s.per_symbol.items():
                out[sym] = max(out.get(sym, 0), c)
        return out


class _Budget(Exception):
    pass


ALGO_GREEDY = "greedy"
ALGO_LOCALLY_GREEDY = "locally-greedy"


def _candidates_for(algo: str, ov: list[list[int]]) -> list[tuple[int, int]]:
    if algo == ALGO_GREEDY:
        return _greedy_candidates(ov)
    if algo == ALGO_LOCALLY_GREEDY:
        return _locally_greedy_candidates(ov)
    raise InvalidInputError(f"unknown algorithm {algo!r}")


def enumerate_instantiations(
    inst: Instance, algo: str = ALGO_GREEDY, budget: int = 500_000
) -> EnumerationResult:
    """Every superstring reachable by some tie-breaking rule of the
    algorithm, each yielded once with a witness merge path.

    States are memoized on the multiset of current strings; the budget
    caps expanded states, and exceeding it returns the outcomes found so
    far flagged incomplete.
    """
    root = tuple(sorted(inst.strings))
    memo: dict[tuple[str, ...], dict[str, tuple]] = {}
    found: dict[str, tuple] = {}
    expanded = 0
    complete = True

    def dfs(state: tuple[str, ...], prefix: tuple) -> dict[str, tuple]:
        nonlocal expanded
        if len(state) == 1:
            found.setdefault(state[0], prefix)
            return {state[0]: ()}
        hit = memo.get(state)
        if hit is not None:
            for final, rel in hit.items():
                found.setdefault(final, prefix + rel)
            return hit
        expanded += 1
        if expanded > budget:
            raise _Budget()
        values = list(state)
        ov = _pool_overlaps(values)
        out: dict[str, tuple] = {}
        for i, j in sorted(_candidates_for(algo, ov)):
            merged = merge(values[i], values[j])
            child = tuple(sorted([merged] + [values[k] for k in range(len(values)) if k not in (i, j)]))
            sub = dfs(child, prefix + ((i, j),))
            for final, rel in sub.items():
                if final not in out:
                    out[final] = ((i, j),) + rel
        memo[state] = out
        return out

    try:
        dfs(root, ())
    except _Budget:
        complete = False

    solutions = tuple(_replay_positional(inst, log) for log in found.values())
    return EnumerationResult(solutions=solutions, complete=complete, states_expanded=expanded)


def _replay_positional(inst: Instance, positional_log) -> Solution:
    """Rebuild a solution from merge positions in sorted-pool coordinates."""
    items = sorted(((s, (idx,)) for idx, s in enumerate(inst.strings)))
    log = []
    for i, j in positional_log:
        (sv, sseq), (tv, tseq) = items[i], items[j]
        k = overlap_length(sv, tv)
        log.append((sseq, tseq, k))
        merged = (merge(sv, tv), sseq + tseq)
        items = sorted([items[t] for t in range(len(items)) if t not in (i, j)] + [merged])
    assert len(items) == 1
    final_val, final_seq = items[0]
    return _build_solution(inst, final_seq, final_val, log)


# ---------------------------------------------------------------------------
# Trace diagnostics


@dataclass(frozen=True)
class DiagnosticsReport:
    w_bc: int
    cm_length: int
    shp_length: int
    laminar_ok: bool
    main2_ok: bool
    placement_ok: bool

    def to_json(self) -> dict:
        return {
            "w_bc": self.w_bc,
            "cm_length": self.cm_length,
            "shp_length": self.shp_length,
            "laminar_ok": self.laminar_ok,
            "main2_ok": self.main2_ok,
            "placement_ok": self.placement_ok,
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _laminar(intervals: Sequence[tuple[int, int]]) -> bool:
    for (a, b), (c, d) in itertools.combinations(intervals, 2):
        disjoint = b < c or d < a
        nested = (a <= c and d <= b) or (c <= a and b <= d)
        if not (disjoint or nested):
            return False
    return True


def analyze_trace(g: WeightedDigraph, trace: PathTrace) -> DiagnosticsReport:
    """Check laminarity, the back-edge endpoint placement rule, and the
    culprit-cycle inequality against the exact shortest Hamiltonian path."""
    if g.n > ANALYZE_LIMIT:
        raise CapacityError(f"trace diagnostics limited to n <= {ANALYZE_LIMIT}")
    order = trace.order
    laminar_ok = _laminar([iv for _, iv in trace.bad_back_edges])

    placement_ok = True
    culprit_starts = {i for i, _ in trace.culprits}
    culprit_ends = {j for _, j in trace.culprits}
    for _, (i, j) in trace.bad_back_edges:
        head_ok = order[i] in trace.v_left or i in culprit_starts
        tail_ok = order[j] in trace.v_right or j in culprit_ends
        if not (head_ok and tail_ok):
            placement_ok = False
            break

    w_bc = sum(e.weight for e in trace.culprit_back_edges)
    cm_edges: list[tuple[int, int]] = []
    cm_nodes: list[int] = []
    for (i, j), back in zip(trace.culprits, trace.culprit_back_edges):
        cm_nodes.extend(order[i : j + 1])
        cm_edges.extend((order[t], order[t + 1]) for t in range(i, j))
        cm_edges.append((back.tail, back.head))
    cm_length = subgraph_length(g, cm_edges, cm_nodes) if cm_nodes else 0

    shp = shortest_hamiltonian_path_length(g)
    return DiagnosticsReport(
        w_bc=w_bc,
        cm_length=cm_length,
        shp_length=shp,
        laminar_ok=laminar_ok,
        main2_ok=w_bc - 2 * cm_length <= shp,
        placement_ok=placement_ok,
    )


# ---------------------------------------------------------------------------
# Merge-log replay as a PATH order


def merge_log_edges(log) -> list[tuple[int, int]]:
    """Graph edges of a merge log: last index of the left string to first
    index of the right string, in merge order."""
    return [(l[-1], r[0]) for l, r, _ in log]


def lga_replay_order(g: WeightedDigraph, chosen: Sequence[tuple[int, int]]) -> OrderPolicy:
    """Explicit PATH order replaying a merge sequence.

    Chosen edges appear in merge order; every other edge is placed after
    all chosen edges, except that edges transitively strictly dominating a
    chosen edge must precede it and are emitted just before the earliest
    such anchor (heaviest first).  Self-loops carry no ordering constraint
    for PATH and go at the end.
    """
    chosen = [tuple(e) for e in chosen]
    chosen_set = set(chosen)
    all_edges = [(u, v) for u in range(g.n) for v in range(g.n)]
    w = g.edge_weights

    def strict_dominators(e: tuple[int, int]) -> list[tuple[int, int]]:
        u, v = e
        out = []
        for x in range(g.n):
            if x != v and w[u][x] > w[u][v]:
                out.append((u, x))
            if x != u and w[x][v] > w[u][v]:
                out.append((x, v))
        return [(a, b) for a, b in out if a != b]

    placed: set[tuple[int, int]] = set()
    order: list[tuple[int, int]] = []
    for anchor in chosen:
        closure: set[tuple[int, int]] = set()
        frontier = [anchor]
        while frontier:
            nxt = []
            for e in frontier:
                for d in strict_dominators(e):
                    if d not in chosen_set and d not in placed and d not in closure:
                        closure.add(d)
                        nxt.append(d)
            frontier = nxt
        for e in sorted(closure, key=lambda e: (-w[e[0]][e[1]], e)):
            order.append(e)
            placed.add(e)
        order.append(anchor)
        placed.add(anchor)
    rest = [e for e in all_edges if e not in placed and e not in chosen_set]
    order.extend(sorted(rest, key=lambda e: (-w[e[0]][e[1]], e)))
    return OrderPolicy.explicit(order)


# ---------------------------------------------------------------------------
# Certification protocol


def max_weight_cover(g: WeightedDigraph) -> CycleCover:
    """Maximum-weight cycle cover of a Monge graph via the greedy scan,
    cross-checked against brute force when small."""
    cover = cyc(g, OrderPolicy.lex())
    if g.n <= BRUTE_FORCE_COVER_LIMIT:
        want = cover_weight(g, brute_force_max_cover(g))
        got = cover_weight(g, cover)
        if got != want:
            raise InvalidInputError(f"greedy cover weight {got} below maximum {want}")
    return cover


def certify_instance(inst: Instance, symbol: Optional[str] = None) -> PropertyReport:
    """Certify the four properties for an instance's graph.

    Without a symbol this checks the overlap graph against its own maximum
    cover.  With a symbol, the per-symbol graph is checked with the Monge
    premise anchored to overlap lengths and the cover taken from the
    overlap graph (the exchange and cross-cycle bounds only hold in that
    anchored form; see the package docs).
    """
    og = overlap_graph(inst)
    cover = max_weight_cover(og)
    if symbol is None:
        return check_properties(og, cover, verify_cover=False)
    sg = sigma_graph(inst, symbol)
    return check_properties(
        sg, cover, premise_weights=og.edge_weights, verify_cover=False
    )
