"""Command-line front end.

All verbs print JSON to stdout (``--pretty`` indents it); errors are
mirrored as JSON objects on stderr.  Exit codes: 0 success, 1 verification
failure, 2 usage error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional

from .errors import (
    CapacityError,
    InvalidInputError,
    ParamSearchExhausted,
    SuperstringError,
)
from .graphs import overlap_graph, sigma_graph, to_dot
from .instances import FAMILY_NAMES, find_sentinel_params, gen_family, sentinelize
from .search import SearchSpace, verify_bound, worst_ratio
from .solvers import (
    ALGO_GREEDY,
    ALGO_LOCALLY_GREEDY,
    TieBreaker,
    certify_instance,
    enumerate_instantiations,
    exact_scs,
    exact_sigma,
    greedy_scs,
    locally_greedy_scs,
)
from .strings import (
    Instance,
    normalize,
    parse_instance_lines,
    serialize_instance_text,
)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: A003 - argparse API
        raise _UsageError(message)


def _emit(obj, pretty: bool) -> None:
    if pretty:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(json.dumps(obj, sort_keys=True))


def _emit_error(code: str, message: str) -> None:
    print(json.dumps({"error": {"code": code, "message": message}}), file=sys.stderr)


def _read_instance(path: str, allow_sentinel: bool = False) -> Instance:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return normalize(parse_instance_lines(text), allow_sentinel=allow_sentinel)


def _tie_breaker(spec: str) -> TieBreaker:
    if spec == "lex":
        return TieBreaker.lex()
    if spec.startswith("random:"):
        try:
            return TieBreaker.seeded(int(spec.split(":", 1)[1]))
        except ValueError as exc:
            raise _UsageError(f"bad tie breaker {spec!r}") from exc
    raise _UsageError(f"tie breaker must be 'lex' or 'random:SEED', got {spec!r}")


def _algo(name: str) -> str:
    if name in (ALGO_GREEDY, ALGO_LOCALLY_GREEDY):
        return name
    raise _UsageError(f"algo must be 'greedy' or 'locally-greedy', got {name!r}")


def _symbol(sym: Optional[str]) -> Optional[str]:
    if sym is not None and len(sym) != 1:
        raise _UsageError("--symbol takes a single character")
    return sym


def _default_jobs() -> int:
    env = os.environ.get("SCS_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def build_parser() -> _Parser:
    p = _Parser(prog="superstring", description=__doc__)
    p.add_argument("--pretty", action="store_true", help="indent JSON output")
    sub = p.add_subparsers(dest="verb", required=True)

    sp = sub.add_parser("solve", help="run one greedy instantiation")
    sp.add_argument("--algo", default=ALGO_GREEDY)
    sp.add_argument("--tie", default="lex", help="lex or random:SEED")
    sp.add_argument("file")

    sp = sub.add_parser("exact", help="exact shortest superstring / symbol count")
    sp.add_argument("--symbol", default=None)
    sp.add_argument("file")

    sp = sub.add_parser("enumerate", help="all instantiations of an algorithm")
    sp.add_argument("--algo", default=ALGO_GREEDY)
    sp.add_argument("--budget", type=int, default=500_000)
    sp.add_argument("--solutions", action="store_true", help="include every solution")
    sp.add_argument("file")

    sp = sub.add_parser("certify", help="check the four graph properties")
    sp.add_argument("--symbol", default=None)
    sp.add_argument("file")

    sp = sub.add_parser("gen", help="emit a named instance family as text")
    sp.add_argument("--family", required=True, choices=FAMILY_NAMES)
    sp.add_argument("--n", type=int, default=None)

    sp = sub.add_parser("sentinelize", help="force the greedy order by sentinel padding")
    sp.add_argument("--target", default=None, help="JSON file with a merge log")
    sp.add_argument("--tie", default="lex", help="target run tie breaker when no --target")
    sp.add_argument("--params-out", default=None, help="write found parameters as JSON")
    sp.add_argument("--m-max", type=int, default=None)
    sp.add_argument("file")

    sp = sub.add_parser("search", help="worst-ratio scan over an instance space")
    sp.add_argument("--alphabet", type=int, required=True)
    sp.add_argument("--max-strings", type=int, required=True)
    sp.add_argument("--max-len", type=int, required=True)
    sp.add_argument("--algo", default=ALGO_GREEDY)
    sp.add_argument("--metric", choices=["length", "uniform"], default="length")
    sp.add_argument("--samples", type=int, default=None, help="random mode sample count")
    sp.add_argument("--seed", type=int, default=0, help="random mode seed")
    sp.add_argument("--bound", default=None, help="verify ratio <= BOUND instead of scanning")
    sp.add_argument("--jobs", type=int, default=None)
    sp.add_argument("--checkpoint", default=None)
    sp.add_argument("--checkpoint-every", type=int, default=1000)
    sp.add_argument("--tsv", action="store_true", help="stream instance/ratio rows instead of JSON")

    sp = sub.add_parser("graph", help="DOT export of the overlap graph")
    sp.add_argument("--dot", required=True, help="output path ('-' for stdout)")
    sp.add_argument("--symbol", default=None)
    sp.add_argument("--all-edges", action="store_true", help="include zero-weight edges")
    sp.add_argument("file")

    return p


def _cmd_solve(args) -> int:
    inst = _read_instance(args.file)
    tie = _tie_breaker(args.tie)
    algo = _algo(args.algo)
    sol = greedy_scs(inst, tie) if algo == ALGO_GREEDY else locally_greedy_scs(inst, tie)
    _emit(sol.to_json(), args.pretty)
    return EXIT_OK


def _cmd_exact(args) -> int:
    inst = _read_instance(args.file)
    sym = _symbol(args.symbol)
    if sym is None:
        sol = exact_scs(inst)
        out = {
            "length": sol.length,
            "compression": sol.compression,
            "superstring": sol.superstring,
            "solution": sol.to_json(),
        }
    else:
        value, perm = exact_sigma(inst, sym)
        out = {"symbol": sym, "min_count": value, "perm": list(perm)}
    _emit(out, args.pretty)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    inst = _read_instance(args.file)
    result = enumerate_instantiations(inst, _algo(args.algo), budget=args.budget)
    lengths = result.lengths
    out = {
        "algo": args.algo,
        "count": len(result.solutions),
        "complete": result.complete,
        "min_length": min(lengths),
        "max_length": max(lengths),
        "lengths": list(lengths),
        "max_per_symbol": result.max_per_symbol(),
    }
    if args.solutions:
        out["solutions"] = [s.to_json() for s in result.solutions]
    _emit(out, args.pretty)
    return EXIT_OK


def _cmd_certify(args) -> int:
    inst = _read_instance(args.file)
    report = certify_instance(inst, _symbol(args.symbol))
    _emit(report.to_json(), args.pretty)
    return EXIT_OK if report.all_ok else EXIT_VERIFICATION


def _cmd_gen(args) -> int:
    inst = gen_family(args.family, args.n)
    sys.stdout.write(serialize_instance_text(inst))
    return EXIT_OK


def _cmd_sentinelize(args) -> int:
    inst = _read_instance(args.file)
    if args.target:
        with open(args.target, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        entries = data["merge_log"] if isinstance(data, dict) else data
        target = [(tuple(e["left"]), tuple(e["right"]), e["overlap"]) for e in entries]
    else:
        target = greedy_scs(inst, _tie_breaker(args.tie)).merge_log
    params = find_sentinel_params(inst, target, m_max=args.m_max)
    padded = sentinelize(inst, params)
    if args.params_out:
        with open(args.params_out, "w", encoding="utf-8") as fh:
            json.dump(params.to_json(), fh)
    sys.stdout.write(serialize_instance_text(padded))
    return EXIT_OK


def _cmd_search(args) -> int:
    algo = _algo(args.algo)
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    if args.samples is not None:
        space = SearchSpace.random(
            args.alphabet, args.max_strings, args.max_len, args.seed, args.samples
        )
    else:
        space = SearchSpace.exhaustive(args.alphabet, args.max_strings, args.max_len)
    if args.bound is not None:
        check = verify_bound(space, algo, args.metric, Fraction(args.bound), jobs=jobs)
        _emit(check.to_json(), args.pretty)
        return EXIT_OK if check.passed else EXIT_VERIFICATION
    tsv = sys.stdout if args.tsv else None
    report = worst_ratio(
        space,
        algo,
        args.metric,
        jobs=jobs,
        checkpoint_path=args.checkpoint,
        checkpoint_every=args.checkpoint_every,
        tsv=tsv,
    )
    if not args.tsv:
        _emit(report.to_json(), args.pretty)
    return EXIT_OK


def _cmd_graph(args) -> int:
    inst = _read_instance(args.file)
    sym = _symbol(args.symbol)
    g = overlap_graph(inst) if sym is None else sigma_graph(inst, sym)
    dot = to_dot(g, include_zero_edges=args.all_edges)
    if args.dot == "-":
        sys.stdout.write(dot)
    else:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot)
        _emit({"out": args.dot, "nodes": g.n}, args.pretty)
    return EXIT_OK


_COMMANDS = {
    "solve": _cmd_solve,
    "exact": _cmd_exact,
    "enumerate": _cmd_enumerate,
    "certify": _cmd_certify,
    "gen": _cmd_gen,
    "sentinelize": _cmd_sentinelize,
    "search": _cmd_search,
    "graph": _cmd_graph,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.verb](args)
    except _UsageError as exc:
        _emit_error("usage", str(exc))
        return EXIT_USAGE
    except (InvalidInputError, FileNotFoundError, json.JSONDecodeError, ValueError) as exc:
        _emit_error("usage", str(exc))
        return EXIT_USAGE
    except CapacityError as exc:
        _emit_error("capacity", str(exc))
        return EXIT_CAPACITY
    except ParamSearchExhausted as exc:
        _emit_error("verification", str(exc))
        return EXIT_VERIFICATION
    except SuperstringError as exc:
        _emit_error("internal", str(exc))
        return EXIT_VERIFICATION


if __name__ == "__main__":
    sys.exit(main())
