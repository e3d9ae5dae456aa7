"""Weighted complete digraphs with self-loops, overlap / per-symbol graph
construction, cycle covers, and the four-property certifier.

A graph carries node weights and an n-by-n edge weight matrix (diagonal =
self-loops).  The length of a subgraph is the sum of its node weights
minus the sum of its edge weights; node weights are counted once per
node, which is why lengths are not additive along shared nodes.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import CapacityError, InvalidInputError
from .strings import Instance, count_occurrences, split


class EdgeRef(NamedTuple):
    tail: int
    head: int
    weight: int


@dataclass(frozen=True)
class WeightedDigraph:
    node_weights: tuple[int, ...]
    edge_weights: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        n = len(self.node_weights)
        if n < 1:
            raise InvalidInputError("graph needs at least one node")
        if len(self.edge_weights) != n or any(len(row) != n for row in self.edge_weights):
            raise InvalidInputError("edge weight matrix must be n x n")
        if any(w < 0 for w in self.node_weights) or any(
            w < 0 for row in self.edge_weights for w in row
        ):
            raise InvalidInputError("weights must be non-negative")
        if self.labels is not None and len(self.labels) != n:
            raise InvalidInputError("label count must match node count")

    @property
    def n(self) -> int:
        return len(self.node_weights)

    def edge(self, tail: int, head: int) -> EdgeRef:
        return EdgeRef(tail, head, self.edge_weights[tail][head])

    def all_edges(self) -> list[EdgeRef]:
        return [
            EdgeRef(u, v, self.edge_weights[u][v])
            for u in range(self.n)
            for v in range(self.n)
        ]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


def overlap_graph(inst: Instance) -> WeightedDigraph:
    """Complete digraph over the instance strings: node weight = string
    length, edge weight = overlap length (diagonal = self-overlap)."""
    node_weights = tuple(len(s) for s in inst.strings)
    edge_weights = tuple(
        tuple(len(split(s, t).ov) for t in inst.strings) for s in inst.strings
    )
    return WeightedDigraph(node_weights, edge_weights, labels=inst.strings)


def sigma_graph(inst: Instance, sym: str) -> WeightedDigraph:
    """Same shape as the overlap graph but weighted by occurrence counts
    of a single symbol."""
    node_weights = tuple(count_occurrences(s, sym) for s in inst.strings)
    edge_weights = tuple(
        tuple(count_occurrences(split(s, t).ov, sym) for t in inst.strings)
        for s in inst.strings
    )
    return WeightedDigraph(node_weights, edge_weights, labels=inst.strings)


def subgraph_weight(g: WeightedDigraph, edges: Iterable[tuple[int, int]]) -> int:
    return sum(g.edge_weights[u][v] for u, v in edges)


def subgraph_length(
    g: WeightedDigraph, edges: Iterable[tuple[int, int]], nodes: Iterable[int]
) -> int:
    """Sum of node weights (once per node) minus sum of edge weights."""
    nodes = set(nodes)
    edges = list(edges)
    for u, v in edges:
        if u not in nodes or v not in nodes:
            raise InvalidInputError(f"edge ({u},{v}) leaves the node set")
    return sum(g.node_weights[v] for v in nodes) - subgraph_weight(g, edges)


@dataclass(frozen=True)
class CycleCover:
    """A successor bijection together with its orbit decomposition."""

    successor: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.successor)
        if sorted(self.successor) != list(range(n)):
            raise InvalidInputError("successor map is not a bijection")

    @property
    def n(self) -> int:
        return len(self.successor)

    @property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = []
            v = start
            while not seen[v]:
                seen[v] = True
                cyc.append(v)
                v = self.successor[v]
            out.append(tuple(cyc))
        return tuple(out)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, self.successor[u]) for u in range(self.n)]


def cover_weight(g: WeightedDigraph, cover: CycleCover) -> int:
    return subgraph_weight(g, cover.edges())


def cycle_edges(cycle: Sequence[int]) -> list[tuple[int, int]]:
    k = len(cycle)
    return [(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


def cycle_graph_length(g: WeightedDigraph, cycle: Sequence[int]) -> int:
    return subgraph_length(g, cycle_edges(cycle), cycle)


def cycle_length_sigma(inst: Instance, cycle: Sequence[int], sym: str) -> int:
    """Per-symbol cycle length: the symbol count of the concatenated
    prefix parts around the cycle."""
    k = len(cycle)
    total = 0
    for i in range(k):
        u, v = cycle[i], cycle[(i + 1) % k]
        total += count_occurrences(split(inst.strings[u], inst.strings[v]).pref, sym)
    return total


BRUTE_FORCE_COVER_LIMIT = 8


def brute_force_max_cover(g: WeightedDigraph) -> CycleCover:
    """Maximum-weight cycle cover by enumerating all successor bijections.

    Test oracle; guarded to small n.  Deterministic: first maximum in
    lexicographic permutation order.
    """
    if g.n > BRUTE_FORCE_COVER_LIMIT:
        raise CapacityError(f"brute-force cover limited to n <= {BRUTE_FORCE_COVER_LIMIT}")
    best = None
    best_w = -1
    for perm in itertools.permutations(range(g.n)):
        w = sum(g.edge_weights[u][perm[u]] for u in range(g.n))
        if w > best_w:
            best_w = w
            best = perm
    assert best is not None
    return CycleCover(tuple(best))


@dataclass(frozen=True)
class PropertyCheck:
    ok: bool
    witness: Optional[dict] = None


@dataclass(frozen=True)
class PropertyReport:
    p1: PropertyCheck
    p2: PropertyCheck
    p3: PropertyCheck
    p4: PropertyCheck
    p4_strict: Optional[bool] = None

    @property
    def all_ok(self) -> bool:
        return self.p1.ok and self.p2.ok and self.p3.ok and self.p4.ok

    def to_json(self) -> dict:
        def chk(c: PropertyCheck) -> dict:
            return {"ok": c.ok, "witness": c.witness}

        return {
            "p1": chk(self.p1),
            "p2": chk(self.p2),
            "p3": chk(self.p3),
            "p4": chk(self.p4),
            "p4_strict": self.p4_strict,
            "all_ok": self.all_ok,
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def check_properties(
    g: WeightedDigraph,
    max_cover: CycleCover,
    premise_weights: Optional[Sequence[Sequence[int]]] = None,
    verify_cover: Optional[bool] = None,
) -> PropertyReport:
    """Certify the four defining properties of a candidate graph.

    P1: node weight dominates incident edge weights.
    P2: length triangle inequality, checked as |v| + w(u,w) >= w(u,v) + w(v,w).
    P3: Monge exchange over quadruples.  The premise may be evaluated on a
        companion weight matrix (``premise_weights``): for per-symbol graphs
        the exchange only holds when the premise is anchored to the overlap
        lengths, so the caller passes the length matrix there.
    P4: cross-cycle edge weight bounded by the two cycle lengths, over
        the supplied cover; ``p4_strict`` reports whether every cross pair
        was strictly below the bound.

    ``verify_cover`` (default: auto, only when n <= 8) re-derives the
    maximum-weight cover by brute force and insists the supplied one
    matches in weight.  Pass ``False`` when certifying with a cover taken
    from a companion graph.
    """
    n = g.n
    if max_cover.n != n:
        raise InvalidInputError("cover size does not match graph")
    if verify_cover is None:
        verify_cover = n <= BRUTE_FORCE_COVER_LIMIT and premise_weights is None
    if verify_cover:
        want = cover_weight(g, brute_force_max_cover(g))
        got = cover_weight(g, max_cover)
        if got != want:
            raise InvalidInputError(
                f"supplied cover has weight {got}, maximum is {want}"
            )
    w = g.edge_weights
    nw = g.node_weights
    pw = w if premise_weights is None else premise_weights

    p1 = PropertyCheck(True)
    for u in range(n):
        for v in range(n):
            if nw[u] < w[u][v]:
                p1 = PropertyCheck(False, {"u": u, "v": v, "side": "out"})
                break
            if nw[u] < w[v][u]:
                p1 = PropertyCheck(False, {"u": u, "v": v, "side": "in"})
                break
        if not p1.ok:
            break

    p2 = PropertyCheck(True)
    for u in range(n):
        for v in range(n):
            for x in range(n):
                if nw[v] + w[u][x] < w[u][v] + w[v][x]:
                    p2 = PropertyCheck(False, {"u": u, "v": v, "w": x})
                    break
            if not p2.ok:
                break
        if not p2.ok:
            break

    p3 = PropertyCheck(True)
    for u in range(n):
        for v in range(n):
            puv = pw[u][v]
            for u2 in range(n):
                if pw[u2][v] > puv:
                    continue
                for v2 in range(n):
                    if pw[u][v2] > puv:
                        continue
                    if w[u][v] + w[u2][v2] < w[u][v2] + w[u2][v]:
                        p3 = PropertyCheck(
                            False, {"u": u, "v": v, "u2": u2, "v2": v2}
                        )
                        break
                if not p3.ok:
                    break
            if not p3.ok:
                break
        if not p3.ok:
            break

    p4 = PropertyCheck(True)
    p4_strict = True
    cycles = max_cover.cycles
    lengths = [cycle_graph_length(g, c) for c in cycles]
    for a in range(len(cycles)):
        for b in range(len(cycles)):
            if a == b:
                continue
            bound = lengths[a] + lengths[b]
            for c1 in cycles[a]:
                for c2 in cycles[b]:
                    if w[c1][c2] > bound:
                        p4 = PropertyCheck(
                            False,
                            {
                                "c1": c1,
                                "c2": c2,
                                "cycle1": list(cycles[a]),
                                "cycle2": list(cycles[b]),
                            },
                        )
                        break
                    if w[c1][c2] == bound:
                        p4_strict = False
                if not p4.ok:
                    break
            if not p4.ok:
                break
        if not p4.ok:
            break

    return PropertyReport(p1, p2, p3, p4, p4_strict if p4.ok else None)


def to_dot(g: WeightedDigraph, include_zero_edges: bool = False) -> str:
    """Graphviz rendering: boxed nodes labelled with their weight, edges
    labelled with positive weights (zero-weight edges off by default)."""
    lines = ["digraph overlap {", "  node [shape=box];"]
    for v in range(g.n):
        lines.append(f'  n{v} [label="{g.label(v)} ({g.node_weights[v]})"];')
    for u in range(g.n):
        for v in range(g.n):
            w = g.edge_weights[u][v]
            if w > 0:
                lines.append(f'  n{u} -> n{v} [label="{w}"];')
            elif include_zero_edges:
                lines.append(f"  n{u} -> n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
