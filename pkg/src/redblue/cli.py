"""Command-line front end: ``redblue generate | solve | fuzz``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Sequence

from .assemble import solve
from .errors import InputError, RedBlueError, SizeLimit
from .instances import SHAPES, generate
from .pivot import classify_hulls
from .render import render_svg
from .serialize import InstanceFile, read_instance, report_to_json
from .verify import MAX_ORACLE_CYCLE, check, oracle_best_k

SEED_ENV = "REDBLUE_SEED"

log = logging.getLogger("redblue")


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"{SEED_ENV} must be an integer, got {raw!r}")


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_generate(args: argparse.Namespace) -> int:
    pts = generate(args.n_red, args.n_blue, args.seed, args.shape)
    meta = {"shape": args.shape, "n_red": args.n_red, "n_blue": args.n_blue,
            "relation": classify_hulls(pts).value}
    _write(args.output, InstanceFile(pts, args.seed, meta).to_json())
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        inst = read_instance(args.input)
        pair = solve(inst.points)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except RedBlueError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    # re-check from scratch, independent of what solve reported
    report = check(inst.points, pair)
    _write(args.json, report_to_json(pair))
    if args.svg:
        _write(args.svg, render_svg(pair, trace=args.trace))
    if args.trace and pair.trace is not None:
        for step in pair.trace.repair_steps:
            print(f"repair {step.kind} at blob {step.blob}: "
                  f"{step.crossings_before} -> {step.crossings_after} blue-red crossings", file=sys.stderr)
    print(f"max_count={report.max_count} ok={report.ok}", file=sys.stderr)
    return 0 if report.ok else 2


def _fuzz_trial(task: tuple[int, int, int, bool]) -> dict[str, Any]:
    seed, index, max_n, use_oracle = task
    rng = random.Random(f"fuzz:{seed}:{index}")
    cap = min(max_n, MAX_ORACLE_CYCLE) if use_oracle else max_n
    n_red, n_blue = rng.randint(3, cap), rng.randint(3, cap)
    shape = SHAPES[index % len(SHAPES)]
    inst_seed = rng.randrange(2 ** 32)
    out: dict[str, Any] = {"index": index, "n_red": n_red, "n_blue": n_blue, "shape": shape, "seed": inst_seed}
    try:
        pts = generate(n_red, n_blue, inst_seed, shape)
        pair = solve(pts)
        rep = check(pts, pair)
        out["max_count"] = rep.max_count
        out["ok"] = rep.ok
        if use_oracle:
            try:
                k = oracle_best_k(pts)
            except SizeLimit:
                k = None
            out["oracle"] = k
            if k is not None and k > rep.max_count:
                out["ok"] = False
                out["error"] = f"oracle {k} above achieved {rep.max_count}"
    except Exception as exc:  # a fuzzer reports, it does not stop
        out["ok"] = False
        out["error"] = f"{type(exc).__name__}: {exc}"
    return out


def run_fuzz(trials: int, max_n: int, seed: int, oracle: bool = False, jobs: int = 1) -> dict[str, Any]:
    tasks = [(seed, i, max_n, oracle) for i in range(trials)]
    if jobs > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_fuzz_trial, tasks, chunksize=max(1, trials // (4 * jobs))))
    else:
        results = [_fuzz_trial(t) for t in tasks]
    hist = Counter(r["max_count"] for r in results if "max_count" in r)
    summary: dict[str, Any] = {
        "trials": trials,
        "seed": seed,
        "max_n": max_n,
        "failures": [r for r in results if not r["ok"]],
        "histogram": {str(k): hist[k] for k in sorted(hist)},
    }
    if oracle:
        oh = Counter(r["oracle"] for r in results if r.get("oracle") is not None)
        summary["oracle_histogram"] = {str(k): oh[k] for k in sorted(oh)}
        # instances whose best achievable maximum is 3 bear on the k = 2 question
        summary["oracle_k3"] = [r for r in results if r.get("oracle") == 3]
    return summary


def cmd_fuzz(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    summary = run_fuzz(args.trials, args.max_n, args.seed, args.oracle, args.jobs)
    _write(args.output, json.dumps(summary, indent=2, sort_keys=True) + "\n")
    print(f"{args.trials} trials, {len(summary['failures'])} failures, "
          f"{time.perf_counter() - t0:.1f}s", file=sys.stderr)
    return 1 if summary["failures"] else 0


def _at_least_three(raw: str) -> int:
    n = int(raw)
    if n < 3:
        raise argparse.ArgumentTypeError("need at least 3 points per color")
    return n


def _non_negative(raw: str) -> int:
    n = int(raw)
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="redblue", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)
    seed = _default_seed()

    g = sub.add_parser("generate", help="write a random instance file")
    g.add_argument("n_red", type=_at_least_three)
    g.add_argument("n_blue", type=_at_least_three)
    g.add_argument("--seed", type=int, default=seed, help=f"default from ${SEED_ENV}, else 0")
    g.add_argument("--shape", choices=SHAPES, default="random")
    g.add_argument("-o", "--output", help="output path (default stdout)")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("solve", help="build and verify the two cycles")
    s.add_argument("input", help="instance file")
    s.add_argument("--json", metavar="OUT", help="report path (default stdout)")
    s.add_argument("--svg", metavar="OUT", help="also draw the result")
    s.add_argument("--trace", action="store_true",
                   help="draw pivot, blob hulls and jump edges; print repair steps")
    s.set_defaults(func=cmd_solve)

    f = sub.add_parser("fuzz", help="solve and verify many random instances")
    f.add_argument("--trials", type=_non_negative, default=100)
    f.add_argument("--max-n", type=_at_least_three, default=12, help="largest color class")
    f.add_argument("--seed", type=int, default=seed, help=f"default from ${SEED_ENV}, else 0")
    f.add_argument("--oracle", action="store_true",
                   help=f"compare with exhaustive search (sizes capped at {MAX_ORACLE_CYCLE})")
    f.add_argument("--jobs", type=int, default=1)
    f.add_argument("-o", "--output", help="summary path (default stdout)")
    f.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
