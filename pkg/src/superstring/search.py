"""Adversarial search over instance spaces: worst approximation ratios
(length or per-symbol) across all tie-breaking behaviours, with exact
rational arithmetic, deterministic parallel scanning, and resumable
checkpoints.
"""

from __future__ import annotations

import itertools
import json
import multiprocessing
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Optional, Sequence

from .errors import CapacityError, InvalidInputError, SuperstringError
from .solvers import (
    ALGO_GREEDY,
    ALGO_LOCALLY_GREEDY,
    _candidates_for,
    _pool_overlaps,
    enumerate_instantiations,
    exact_scs,
    exact_sigma,
)
from .strings import Instance, count_occurrences, merge

METRIC_LENGTH = "length"
METRIC_UNIFORM = "uniform"

EXHAUSTIVE_UNIVERSE_LIMIT = 200_000


@dataclass(frozen=True)
class SearchSpace:
    """A set of instances to scan: every substring-free instance within
    the caps (exhaustive), a seeded random sample, or an explicit list."""

    alphabet_size: int
    max_strings: int
    max_len: int
    mode: str = "exhaustive"
    seed: Optional[int] = None
    samples: Optional[int] = None
    explicit_strings: Optional[tuple[tuple[str, ...], ...]] = None

    @classmethod
    def exhaustive(cls, alphabet_size: int, max_strings: int, max_len: int) -> "SearchSpace":
        return cls(alphabet_size, max_strings, max_len)

    @classmethod
    def random(
        cls, alphabet_size: int, max_strings: int, max_len: int, seed: int, samples: int
    ) -> "SearchSpace":
        return cls(alphabet_size, max_strings, max_len, mode="random", seed=seed, samples=samples)

    @classmethod
    def of_instances(cls, instances: Sequence[Instance]) -> "SearchSpace":
        strs = tuple(inst.strings for inst in instances)
        a = max(len(inst.alphabet) for inst in instances)
        s = max(inst.n for inst in instances)
        l = max(len(x) for inst in instances for x in inst.strings)
        return cls(a, s, l, mode="explicit", explicit_strings=strs)

    def universe(self) -> list[str]:
        alphabet = "abcdefghijklmnopqrstuvwxyz"[: self.alphabet_size]
        out: list[str] = []
        for length in range(1, self.max_len + 1):
            count = len(alphabet) ** length
            if len(out) + count > EXHAUSTIVE_UNIVERSE_LIMIT:
                raise CapacityError("string universe too large for exhaustive search")
            out.extend("".join(p) for p in itertools.product(alphabet, repeat=length))
        return out

    def instances(self) -> list[Instance]:
        """Materialize the space in canonical scan order (deterministic;
        exhaustive spaces visit every substring-free instance once)."""
        if self.mode == "explicit":
            assert self.explicit_strings is not None
            return [Instance(s, allow_sentinel=True) for s in self.explicit_strings]
        if self.mode == "random":
            if self.seed is None or self.samples is None:
                raise InvalidInputError("random mode needs seed and samples")
            import random as _random

            from .instances import random_instance

            rng = _random.Random(self.seed)
            out = []
            for _ in range(self.samples):
                count = rng.randint(1, self.max_strings)
                out.append(
                    random_instance(rng.randrange(2**32), count, self.max_len, self.alphabet_size)
                )
            return out
        if self.mode != "exhaustive":
            raise InvalidInputError(f"unknown search mode {self.mode!r}")
        universe = self.universe()
        out = []

        def extend(start: int, chosen: list[str]) -> None:
            if chosen:
                out.append(Instance(tuple(chosen)))
            if len(chosen) == self.max_strings:
                return
            for idx in range(start, len(universe)):
                cand = universe[idx]
                if all(cand not in other and other not in cand for other in chosen):
                    chosen.append(cand)
                    extend(idx + 1, chosen)
                    chosen.pop()

        extend(0, [])
        return out

    def key(self) -> dict:
        return {
            "alphabet_size": self.alphabet_size,
            "max_strings": self.max_strings,
            "max_len": self.max_len,
            "mode": self.mode,
            "seed": self.seed,
            "samples": self.samples,
            "explicit": [list(s) for s in self.explicit_strings] if self.explicit_strings else None,
        }


# ---------------------------------------------------------------------------
# Per-instance outcome statistics (all instantiations, collapsed tails)


def reachable_outcomes(
    inst: Instance, algo: str, budget: int = 1_000_000
) -> set[tuple[int, tuple[int, ...]]]:
    """All (length, per-symbol counts) pairs reachable by instantiations
    of the algorithm.  Once every overlap in a pool is empty the remaining
    merges cannot change length or counts, so such states collapse to a
    single outcome; states are memoized on the string multiset.
    """
    alphabet = inst.alphabet
    expanded = 0
    memo: dict[tuple[str, ...], frozenset] = {}

    def counts_of(values: Sequence[str]) -> tuple[int, ...]:
        return tuple(sum(count_occurrences(v, c) for v in values) for c in alphabet)

    def dfs(state: tuple[str, ...]) -> frozenset:
        nonlocal expanded
        hit = memo.get(state)
        if hit is not None:
            return hit
        if len(state) == 1:
            res = frozenset({(len(state[0]), counts_of(state))})
            memo[state] = res
            return res
        values = list(state)
        ov = _pool_overlaps(values)
        n = len(values)
        if max(ov[i][j] for i in range(n) for j in range(n) if i != j) == 0:
            res = frozenset({(sum(len(v) for v in values), counts_of(values))})
            memo[state] = res
            return res
        expanded += 1
        if expanded > budget:
            raise SuperstringError("instantiation enumeration budget exhausted")
        acc: set = set()
        for i, j in _candidates_for(algo, ov):
            merged = merge(values[i], values[j])
            child = tuple(sorted([merged] + [values[k] for k in range(n) if k not in (i, j)]))
            acc |= dfs(child)
        res = frozenset(acc)
        memo[state] = res
        return res

    return set(dfs(tuple(sorted(inst.strings))))


@dataclass(frozen=True)
class InstanceWorst:
    """Worst ratio of one instance: exact fraction plus the achieving
    algorithm value, optimum, and symbol (None for the length metric)."""

    ratio: Fraction
    symbol: Optional[str]
    algorithm_value: int
    optimum: int
    infinity: Optional[dict] = None


def instance_worst(inst: Instance, algo: str, metric: str, budget: int = 1_000_000) -> InstanceWorst:
    outcomes = reachable_outcomes(inst, algo, budget)
    if metric == METRIC_LENGTH:
        alg = max(length for length, _ in outcomes)
        opt = exact_scs(inst).length
        return InstanceWorst(Fraction(alg, opt), None, alg, opt)
    if metric != METRIC_UNIFORM:
        raise InvalidInputError(f"unknown metric {metric!r}")
    alphabet = inst.alphabet
    best: Optional[InstanceWorst] = None
    infinity = None
    for pos, sym in enumerate(alphabet):
        alg = max(counts[pos] for _, counts in outcomes)
        opt, _ = exact_sigma(inst, sym)
        if opt == 0:
            if alg > 0 and infinity is None:
                infinity = {"symbol": sym, "algorithm_value": alg}
            continue
        ratio = Fraction(alg, opt)
        if best is None or ratio > best.ratio:
            best = InstanceWorst(ratio, sym, alg, opt)
    if best is None:
        # Every symbol had optimum 0; length >= 1 makes that impossible
        # unless the infinity flag is set.
        assert infinity is not None
        best = InstanceWorst(Fraction(0), None, 0, 1)
    return InstanceWorst(best.ratio, best.symbol, best.algorithm_value, best.optimum, infinity)


# ---------------------------------------------------------------------------
# Reports


@dataclass(frozen=True)
class RatioReport:
    best_ratio: Fraction
    witness_instance: Instance
    witness_solution: "object"
    metric: str
    symbol: Optional[str]
    algorithm_value: int
    optimum: int
    instances_scanned: int
    exhausted: bool
    infinity: Optional[dict] = None

    def to_json(self) -> dict:
        return {
            "best_ratio": {
                "numerator": self.best_ratio.numerator,
                "denominator": self.best_ratio.denominator,
                "value": f"{self.best_ratio.numerator}/{self.best_ratio.denominator}",
            },
            "witness_instance": list(self.witness_instance.strings),
            "witness_solution": self.witness_solution.to_json(),
            "metric": self.metric,
            "symbol": self.symbol,
            "algorithm_value": self.algorithm_value,
            "optimum": self.optimum,
            "instances_scanned": self.instances_scanned,
            "exhausted": self.exhausted,
            "infinity": self.infinity,
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass(frozen=True)
class BoundCheck:
    passed: bool
    bound: Fraction
    instances_scanned: int
    counterexample: Optional[dict] = None

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "bound": {"numerator": self.bound.numerator, "denominator": self.bound.denominator},
            "instances_scanned": self.instances_scanned,
            "counterexample": self.counterexample,
        }


def _witness_solution(inst: Instance, algo: str, metric: str, worst: InstanceWorst):
    """Re-derive a concrete solution achieving the instance's worst value
    through the full instantiation enumerator (soundness re-check)."""
    enum = enumerate_instantiations(inst, algo)
    if metric == METRIC_LENGTH:
        for sol in enum.solutions:
            if sol.length == worst.algorithm_value:
                return sol
    else:
        sym = worst.symbol if worst.symbol is not None else (
            worst.infinity["symbol"] if worst.infinity else None
        )
        target = (
            worst.algorithm_value
            if worst.symbol is not None
            else worst.infinity["algorithm_value"]
        )
        for sol in enum.solutions:
            if sym is not None and sol.per_symbol.get(sym, 0) == target:
                return sol
    raise SuperstringError("witness did not re-verify through enumeration")


# ---------------------------------------------------------------------------
# Parallel scanning


def _scan_chunk(args):
    strings_chunk, start_index, algo, metric, budget, want_rows = args
    best = None  # (ratio, index, strings, symbol, alg, opt)
    infinity = None
    rows = [] if want_rows else None
    for offset, strs in enumerate(strings_chunk):
        inst = Instance(strs, allow_sentinel=True)
        idx = start_index + offset
        worst = instance_worst(inst, algo, metric, budget)
        if worst.infinity is not None and infinity is None:
            infinity = {"index": idx, "instance": list(strs), **worst.infinity}
        if best is None or worst.ratio > best[0]:
            best = (worst.ratio, idx, strs, worst.symbol, worst.algorithm_value, worst.optimum)
        if want_rows:
            rows.append((idx, ",".join(strs), str(worst.ratio)))
    return best, infinity, rows


def _chunks(seq, size):
    for i in range(0, len(seq), size):
        yield i, seq[i : i + size]


CHECKPOINT_VERSION = 1


def _load_checkpoint(path: str, key: dict) -> Optional[dict]:
    if not path or not os.path.exists(path):
        return None
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if data.get("version") != CHECKPOINT_VERSION or data.get("key") != key:
        raise InvalidInputError("checkpoint does not match this search configuration")
    return data


def _save_checkpoint(path: str, key: dict, next_index: int, best, infinity) -> None:
    data = {
        "version": CHECKPOINT_VERSION,
        "key": key,
        "next_index": next_index,
        "best": None
        if best is None
        else {
            "numerator": best[0].numerator,
            "denominator": best[0].denominator,
            "index": best[1],
            "strings": list(best[2]),
            "symbol": best[3],
            "algorithm_value": best[4],
            "optimum": best[5],
        },
        "infinity": infinity,
    }
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(data, fh)
    os.replace(tmp, path)


def worst_ratio(
    space: SearchSpace,
    algo: str,
    metric: str,
    *,
    jobs: int = 1,
    budget: int = 1_000_000,
    checkpoint_path: Optional[str] = None,
    checkpoint_every: int = 1000,
    tsv: Optional[IO[str]] = None,
) -> RatioReport:
    """Scan the space and report the maximum ratio of worst instantiation
    value to exact optimum, with a re-verified witness.

    Deterministic for a given space regardless of ``jobs``: chunk results
    are merged in canonical order and ties keep the earliest instance.
    """
    if algo not in (ALGO_GREEDY, ALGO_LOCALLY_GREEDY):
        raise InvalidInputError(f"unknown algorithm {algo!r}")
    instances = space.instances()
    if any(inst.n > 20 for inst in instances):
        raise CapacityError("exact oracles cap instances at 20 strings")
    key = {"space": space.key(), "algo": algo, "metric": metric}
    best = None
    infinity = None
    start_at = 0
    if checkpoint_path:
        saved = _load_checkpoint(checkpoint_path, key)
        if saved is not None:
            start_at = saved["next_index"]
            if saved["best"] is not None:
                b = saved["best"]
                best = (
                    Fraction(b["numerator"], b["denominator"]),
                    b["index"],
                    tuple(b["strings"]),
                    b["symbol"],
                    b["algorithm_value"],
                    b["optimum"],
                )
            infinity = saved["infinity"]

    todo = [inst.strings for inst in instances[start_at:]]
    chunk_size = max(1, min(256, checkpoint_every))
    tasks = [
        (chunk, start_at + i, algo, metric, budget, tsv is not None)
        for i, chunk in _chunks(todo, chunk_size)
    ]

    since_save = 0

    def absorb(result, done_through: int) -> None:
        nonlocal best, infinity, since_save
        chunk_best, chunk_inf, rows = result
        if chunk_best is not None and (best is None or chunk_best[0] > best[0]):
            best = chunk_best
        if chunk_inf is not None and (infinity is None or chunk_inf["index"] < infinity["index"]):
            infinity = chunk_inf
        if rows:
            for idx, strs, ratio in rows:
                tsv.write(f"{idx}\t{strs}\t{ratio}\n")
        since_save += chunk_size
        if checkpoint_path and since_save >= checkpoint_every:
            _save_checkpoint(checkpoint_path, key, done_through, best, infinity)
            since_save = 0

    if jobs <= 1:
        for task in tasks:
            absorb(_scan_chunk(task), task[1] + len(task[0]))
    else:
        with multiprocessing.Pool(processes=jobs) as pool:
            for task, result in zip(tasks, pool.imap(_scan_chunk, tasks)):
                absorb(result, task[1] + len(task[0]))

    if best is None:
        raise InvalidInputError("empty search space")
    if checkpoint_path:
        _save_checkpoint(checkpoint_path, key, len(instances), best, infinity)
    ratio, idx, strs, symbol, alg_value, opt = best
    inst = Instance(strs, allow_sentinel=True)
    worst = InstanceWorst(ratio, symbol, alg_value, opt, None)
    solution = _witness_solution(inst, algo, metric, worst)
    return RatioReport(
        best_ratio=ratio,
        witness_instance=inst,
        witness_solution=solution,
        metric=metric,
        symbol=symbol,
        algorithm_value=alg_value,
        optimum=opt,
        instances_scanned=len(instances),
        exhausted=space.mode != "random",
        infinity=infinity,
    )


def verify_bound(
    space: SearchSpace,
    algo: str,
    metric: str,
    bound: Fraction | int | str,
    *,
    jobs: int = 1,
    budget: int = 1_000_000,
) -> BoundCheck:
    """Short-circuit scan: fail on the first instance whose worst ratio
    exceeds the bound (an instantiation count with zero optimum always
    fails)."""
    bound = Fraction(bound)
    instances = space.instances()
    scanned = 0

    def check(inst: Instance, idx: int) -> Optional[dict]:
        worst = instance_worst(inst, algo, metric, budget)
        if worst.infinity is not None:
            sol = _witness_solution(inst, algo, metric, worst)
            return {
                "index": idx,
                "instance": list(inst.strings),
                "symbol": worst.infinity["symbol"],
                "algorithm_value": worst.infinity["algorithm_value"],
                "optimum": 0,
                "ratio": "infinity",
                "solution": sol.to_json(),
            }
        if worst.ratio > bound:
            sol = _witness_solution(inst, algo, metric, worst)
            return {
                "index": idx,
                "instance": list(inst.strings),
                "symbol": worst.symbol,
                "algorithm_value": worst.algorithm_value,
                "optimum": worst.optimum,
                "ratio": f"{worst.ratio.numerator}/{worst.ratio.denominator}",
                "solution": sol.to_json(),
            }
        return None

    if jobs <= 1:
        for idx, inst in enumerate(instances):
            scanned += 1
            bad = check(inst, idx)
            if bad is not None:
                return BoundCheck(False, bound, scanned, bad)
        return BoundCheck(True, bound, scanned, None)

    tasks = [
        (chunk, i, algo, metric, budget, False)
        for i, chunk in _chunks([inst.strings for inst in instances], 256)
    ]
    with multiprocessing.Pool(processes=jobs) as pool:
        for task, result in zip(tasks, pool.imap(_scan_chunk, tasks)):
            chunk_best, chunk_inf, _ = result
            scanned += len(task[0])
            if chunk_inf is not None or (chunk_best is not None and chunk_best[0] > bound):
                # Re-scan the offending chunk sequentially for the first hit.
                for offset, strs in enumerate(task[0]):
                    inst = Instance(strs, allow_sentinel=True)
                    bad = check(inst, task[1] + offset)
                    if bad is not None:
                        pool.terminate()
                        return BoundCheck(False, bound, task[1] + offset + 1, bad)
    return BoundCheck(True, bound, len(instances), None)
