"""Acceptance suite: one PASS/FAIL line per criterion.

The lines are printed as each test finishes and again in the terminal summary.
Run directly with ``python tests/test_acceptance.py`` for just the lines.
"""

import os
import random
import subprocess
import sys
import time

from redblue.assemble import solve
from redblue.instances import forcing_layout, generate, mixed
from redblue.jump import blue_red_crossings, canonical_config, find_4_forcings, repair, validate_config
from redblue.paths import line_crossings, predicted_crossings, spanning_path
from redblue.pivot import MAX_HALVINGS, HullRelation, choose_pivot, classify_hulls, swap_colors
from redblue.radial import gap_angles_ok, has_any_monster_jump, radial_order
from redblue.serialize import InstanceFile, report_to_json
from redblue.verify import check, oracle_best_k, oracle_spanning_paths

from helpers import random_blob_order, random_path_case

RESULTS: list[str] = []


def record(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})"
    RESULTS.append(line)
    print(line)
    return ok


def test_criterion_1_theorem_suite():
    t0 = time.perf_counter()
    failures = []
    hist = {}
    for seed in range(1000):
        S = mixed(seed)
        try:
            rep = check(S, solve(S))
        except Exception as exc:
            failures.append((seed, repr(exc)))
            continue
        hist[rep.max_count] = hist.get(rep.max_count, 0) + 1
        if not rep.ok:
            failures.append((seed, f"max {rep.max_count}"))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 120
    record(1, "1000 mixed instances solve and verify", ok,
           f"{len(failures)} failures, max-count histogram {dict(sorted(hist.items()))}, {elapsed:.1f}s < 120s")
    assert not failures, failures[:5]
    assert elapsed < 120


def test_criterion_2_oracle_consistency():
    t0 = time.perf_counter()
    bad = []
    tight = 0
    for seed in range(200):
        S = mixed(10_000 + seed, 3, 7)
        achieved = check(S, solve(S)).max_count
        best = oracle_best_k(S)
        tight += best == achieved
        if not best <= achieved <= 3:
            bad.append((seed, best, achieved))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 300
    record(2, "oracle <= achieved <= 3 on 200 small instances", ok,
           f"{len(bad)} violations, {tight} instances optimal, {elapsed:.1f}s < 300s")
    assert not bad, bad[:5]
    assert elapsed < 300


def test_criterion_3_blob_paths():
    bad = []
    counts = {0: 0, 1: 0, 2: 0}
    for seed in range(300):
        X, x, y, ell = random_path_case(random.Random(f"path:{seed}"))
        got = line_crossings(spanning_path(X, x, y, ell).vertices, ell)
        want = predicted_crossings(X, x, y, ell)
        best = oracle_spanning_paths(X, x, y, ell)[0]
        counts[want] += 1
        if not got == want == best:
            bad.append((seed, got, want, best))
    record(3, "spanning path crossings match the 0/1/2 clauses and the oracle", not bad,
           f"{len(bad)} mismatches over 300 cases, clause mix {counts}")
    assert not bad, bad[:5]


def test_criterion_4_canonical_configs():
    rng = random.Random("orders")
    bad = []
    kept = drawn = 0
    while kept < 300:
        drawn += 1
        order = random_blob_order(rng)
        if order is None or has_any_monster_jump(order) or not gap_angles_ok(order):
            continue
        kept += 1
        rep = validate_config(canonical_config(order))
        if not rep.ok:
            bad.append(rep.first)
    record(4, "canonical configurations validate on 300 monster-jump-free orders", not bad,
           f"{len(bad)} failures, {drawn} orders drawn")
    assert not bad, bad[:5]


def test_criterion_5_repair_corpus():
    bad = []
    kinds = {}
    for seed in range(24):
        pts, pivot = forcing_layout(seed)
        order = radial_order(pts, pivot)
        cfg = canonical_config(order)
        assert find_4_forcings(cfg), seed
        steps = []
        try:
            out = repair(cfg, steps.append)
        except Exception as exc:
            bad.append((seed, repr(exc)))
            continue
        cap = 4 * len(order.blobs) ** 2
        for s in steps:
            kinds[s.kind] = kinds.get(s.kind, 0) + 1
        if (len(steps) > cap or find_4_forcings(out) or not validate_config(out).ok
                or blue_red_crossings(out) > blue_red_crossings(cfg)
                or any(s.crossings_after > s.crossings_before for s in steps)):
            bad.append((seed, "postcondition"))
    record(5, "repair clears every 4-forcing in the 24-instance corpus", not bad,
           f"{len(bad)} failures, steps {kinds}")
    assert not bad, bad


def test_criterion_6_pivots():
    bad = []
    worst = 0
    shapes = {
        HullRelation.PROPER_OVERLAP: "overlap",
        HullRelation.RED_CONTAINS_BLUE: "contain",
        HullRelation.BLUE_CONTAINS_RED: "contain",
        HullRelation.DISJOINT: "disjoint",
    }
    for relation, shape in shapes.items():
        for seed in range(300):
            rng = random.Random(f"pivot:{relation.value}:{seed}")
            n_red, n_blue = rng.randint(3, 20), rng.randint(3, 20)
            S = generate(n_red, n_blue, seed, shape)
            if relation is HullRelation.BLUE_CONTAINS_RED:
                S = swap_colors(S)
            try:
                choice = choose_pivot(S)
            except Exception as exc:
                bad.append((relation.value, seed, repr(exc)))
                continue
            cand = choice.candidate
            if choice.relation is not relation or classify_hulls(S) is not relation:
                bad.append((relation.value, seed, "relation"))
            elif relation is HullRelation.DISJOINT:
                if cand is not None:
                    bad.append((relation.value, seed, "candidate for disjoint hulls"))
            elif (cand.halvings > MAX_HALVINGS or has_any_monster_jump(cand.order)
                  or not gap_angles_ok(cand.order)):
                bad.append((relation.value, seed, "postcondition"))
            else:
                worst = max(worst, cand.halvings)
    record(6, "pivot search succeeds on 300 instances per hull relation", not bad,
           f"{len(bad)} failures, most halvings {worst} <= {MAX_HALVINGS}")
    assert not bad, bad[:5]


def _cli_report(inst_path, out_path, hash_seed):
    env = dict(os.environ, PYTHONHASHSEED=str(hash_seed))
    subprocess.run([sys.executable, "-m", "redblue.cli", "solve", inst_path, "--json", out_path],
                   check=True, env=env, capture_output=True)
    with open(out_path, "rb") as fh:
        return fh.read()


def test_criterion_7_determinism(tmp_path):
    same = 0
    for seed in range(30):
        a = report_to_json(solve(mixed(seed)))
        b = report_to_json(solve(mixed(seed)))
        same += a == b
    # separate interpreters with different hash seeds, through the CLI
    cli_same = 0
    for seed in range(3):
        path = tmp_path / f"inst{seed}.json"
        path.write_text(InstanceFile(mixed(seed), seed).to_json())
        outs = {_cli_report(str(path), str(tmp_path / f"r{seed}_{h}.json"), h) for h in (1, 2)}
        cli_same += len(outs) == 1
    ok = same == 30 and cli_same == 3
    record(7, "identical seeds give byte-identical JSON reports", ok,
           f"{same}/30 in-process, {cli_same}/3 across interpreters")
    assert ok


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    for name, fn in list(globals().items()):
        if name.startswith("test_criterion"):
            try:
                if "tmp_path" in fn.__code__.co_varnames[:fn.__code__.co_argcount]:
                    with tempfile.TemporaryDirectory() as d:
                        fn(Path(d))
                else:
                    fn()
            except AssertionError:
                pass
