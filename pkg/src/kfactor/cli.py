"""Command line: solve, verify, difftest, and bench.

Exit codes:
    solve:    0 factor printed, 1 no factor, 2 bad input or usage.
    verify:   0 factor valid, 1 degree violations, 2 bad input or usage.
    difftest: 0 clean, 1 completeness gaps only, 2 soundness failures or errors.
    bench:    0 table printed, 2 bad ladder or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .difftest import DiffConfig, run_difftest
from .graph import Graph, GraphFormatError, parse_graph
from .oracle import DEFAULT_EDGE_CAP, brute_force_k_factor, random_regular
from .solver import FACTOR_FOUND, compute_bipartite_k_factor, compute_k_factor, verify_factor
from .subgraph import parse_factor, serialize_factor
import random


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _ladder(text: str) -> list[int]:
    try:
        values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated integer list") from None
    if not values:
        raise argparse.ArgumentTypeError("ladder is empty")
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("ladder entries must be >= 1")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise argparse.ArgumentTypeError("ladder must be strictly increasing")
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kfactor", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="compute a k-factor of an edge-list graph")
    solve.add_argument("--input", default="-", help="edge-list path, or - for stdin")
    solve.add_argument("--k", type=_positive_int, required=True)
    solve.add_argument("--json", action="store_true", help="structured result document")
    solve.add_argument("--trace", action="store_true", help="search events on stderr")
    solve.add_argument("--oracle-check", action="store_true",
                       help="also run the brute-force oracle when within its cap")
    solve.add_argument("--bipartite", action="store_true",
                       help="use the bipartite path engine (refuses odd cycles)")
    solve.set_defaults(func=_cmd_solve)

    verify = sub.add_parser("verify", help="check a factor file against a graph")
    verify.add_argument("factor", help="factor file, one 'u v' line per edge")
    verify.add_argument("--input", default="-", help="edge-list path, or - for stdin")
    verify.add_argument("--k", type=_positive_int, required=True)
    verify.set_defaults(func=_cmd_verify)

    diff = sub.add_parser("difftest", help="differential-test the solver against the oracle")
    source = diff.add_mutually_exclusive_group(required=True)
    source.add_argument("--exhaustive", type=int, metavar="N",
                        help="all labeled graphs on exactly N vertices")
    source.add_argument("--random", type=_positive_int, metavar="COUNT",
                        help="COUNT seeded random instances")
    diff.add_argument("--n", type=_positive_int, help="vertex count for random mode")
    diff.add_argument("--p", type=float, help="gnp edge probability")
    diff.add_argument("--d", type=int, help="regular model degree")
    diff.add_argument("--k", type=_positive_int, action="append", required=True,
                      help="k value to test, repeatable")
    diff.add_argument("--seed", type=int, default=0)
    diff.add_argument("--out", default="difftest-out", help="counterexample directory")
    diff.add_argument("--json", action="store_true")
    diff.set_defaults(func=_cmd_difftest)

    bench = sub.add_parser("bench", help="time the solver on a d-regular size ladder")
    bench.add_argument("--n", type=_ladder, required=True,
                       help="comma-separated strictly increasing vertex counts")
    bench.add_argument("--d", type=_positive_int, required=True)
    bench.add_argument("--k", type=_positive_int, required=True)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--repeat", type=_positive_int, default=1,
                       help="solve each size this many times and report the fastest")
    bench.add_argument("--json", action="store_true")
    bench.set_defaults(func=_cmd_bench)

    return parser


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> Graph:
    return parse_graph(_read_text(path))


def _print_trace(event: str, *fields) -> None:
    print("\t".join([event, *map(str, fields)]), file=sys.stderr)


def _cmd_solve(args) -> int:
    try:
        g = _load_graph(args.input)
    except (OSError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    trace = _print_trace if args.trace else None
    try:
        if args.bipartite:
            outcome = compute_bipartite_k_factor(g, args.k, trace=trace)
        else:
            outcome = compute_k_factor(g, args.k, trace=trace)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    oracle_doc = None
    oracle_note = None
    if args.oracle_check:
        if g.m <= DEFAULT_EDGE_CAP:
            oracle_factor = brute_force_k_factor(g, args.k)
            oracle_yes = oracle_factor is not None
            solver_yes = outcome.status == FACTOR_FOUND
            oracle_doc = {"ran": True, "has_factor": oracle_yes, "agrees": oracle_yes == solver_yes}
            oracle_note = (
                f"oracle: {'agrees' if oracle_doc['agrees'] else 'DISAGREES'}"
                f" (oracle says {'factor' if oracle_yes else 'no factor'})"
            )
        else:
            oracle_doc = {"ran": False, "has_factor": None, "agrees": None}
            oracle_note = f"oracle: skipped ({g.m} edges exceeds cap {DEFAULT_EDGE_CAP})"

    if args.json:
        doc = {
            "status": outcome.status,
            "k": args.k,
            "n": g.n,
            "m": g.m,
            "factor": None if outcome.factor is None
            else [list(g.endpoints[e]) for e in outcome.factor],
            "reason": outcome.reason,
            "stats": {
                "augmentations": outcome.stats.augmentations,
                "trails_examined": outcome.stats.trails_examined,
                "blossom_operations": outcome.stats.blossom_operations,
                "elapsed_s": outcome.stats.elapsed_s,
            },
        }
        if oracle_doc is not None:
            doc["oracle"] = oracle_doc
        print(json.dumps(doc, indent=2))
    else:
        if outcome.status == FACTOR_FOUND:
            sys.stdout.write(serialize_factor(g, outcome.factor))
        else:
            print(f"no {args.k}-factor: {outcome.reason}")
        if oracle_note:
            print(oracle_note)
    return 0 if outcome.status == FACTOR_FOUND else 1


def _cmd_verify(args) -> int:
    try:
        g = _load_graph(args.input)
        factor_text = _read_text(args.factor)
        edges = parse_factor(g, factor_text)
    except (OSError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    ok, report = verify_factor(g, args.k, edges)
    if ok:
        print(f"factor valid: every vertex has degree {args.k}")
        return 0
    for v in sorted(report):
        print(f"vertex {v}: degree {report[v]}, expected {args.k}")
    return 1


def _cmd_difftest(args) -> int:
    if args.exhaustive is not None:
        config = DiffConfig(
            mode="exhaustive",
            n=args.exhaustive,
            k_values=tuple(args.k),
            out_dir=args.out,
        )
    else:
        if args.n is None:
            print("error: --random needs --n", file=sys.stderr)
            return 2
        if (args.p is None) == (args.d is None):
            print("error: --random needs exactly one of --p or --d", file=sys.stderr)
            return 2
        model = "gnp" if args.p is not None else "d_regular"
        config = DiffConfig(
            mode="random",
            n=args.n,
            k_values=tuple(args.k),
            out_dir=args.out,
            count=args.random,
            model=model,
            p=args.p if args.p is not None else 0.0,
            d=args.d if args.d is not None else 0,
            seed=args.seed,
        )
    try:
        report = run_difftest(config)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        sys.stdout.write(report.render())
    return report.exit_code()


def _cmd_bench(args) -> int:
    rows = []
    for n in args.n:
        if args.d >= n or (n * args.d) % 2:
            print(f"error: no simple {args.d}-regular graph on {n} vertices", file=sys.stderr)
            return 2
        g = random_regular(n, args.d, random.Random(args.seed))
        elapsed = float("inf")
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            outcome = compute_k_factor(g, args.k)
            elapsed = min(elapsed, time.perf_counter() - t0)
        rows.append({
            "n": n,
            "d": args.d,
            "k": args.k,
            "m": g.m,
            "status": outcome.status,
            "augmentations": outcome.stats.augmentations,
            "time_s": round(elapsed, 4),
            "time_per_kmn": elapsed / (args.k * g.m * n),
        })
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        print(f"{'n':>8} {'d':>4} {'k':>4} {'m':>9} {'status':>16} {'augment':>9} {'time_s':>10} {'time/(k*m*n)':>13}")
        for r in rows:
            print(
                f"{r['n']:>8} {r['d']:>4} {r['k']:>4} {r['m']:>9} {r['status']:>16}"
                f" {r['augmentations']:>9} {r['time_s']:>10.3f} {r['time_per_kmn']:>13.3e}"
            )
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
