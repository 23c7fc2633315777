"""Independent checker and brute-force oracles.

Nothing here reuses the construction; every count comes straight from the
segment crossing predicate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

import numpy as np

from .errors import DegenerateOverlap, SizeLimit
from .geometry import Color, Point, crosses

MAX_ORACLE_CYCLE = 7
MAX_ORACLE_PATH = 9

Edge = tuple[Point, Point]


@dataclass
class CrossingReport:
    per_edge_counts: dict[tuple[Color, Point, Point], int]
    max_count: int
    self_intersections: list[tuple[Color, Edge, Edge]] = field(default_factory=list)
    spanning_ok: dict[Color, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.max_count <= 3 and not self.self_intersections and all(self.spanning_ok.values())

    def histogram(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.per_edge_counts.values():
            out[c] = out.get(c, 0) + 1
        return dict(sorted(out.items()))


def cycle_edges(cycle: Sequence[Point]) -> list[Edge]:
    n = len(cycle)
    if n < 2:
        return []
    if n == 2:
        return [(cycle[0], cycle[1])]
    return [(cycle[i], cycle[(i + 1) % n]) for i in range(n)]


def _safe_cross(e: Edge, f: Edge) -> bool:
    try:
        return crosses(*e, *f)
    except DegenerateOverlap:
        return True


def _self_intersections(color: Color, cycle: Sequence[Point]) -> list[tuple[Color, Edge, Edge]]:
    edges = cycle_edges(cycle)
    n = len(edges)
    bad = []
    for i in range(n):
        for j in range(i + 1, n):
            if _safe_cross(edges[i], edges[j]):
                bad.append((color, edges[i], edges[j]))
    return bad


def check_cycles(S: Sequence[Point], red_cycle: Sequence[Point], blue_cycle: Sequence[Point]) -> CrossingReport:
    cycles = {Color.RED: tuple(red_cycle), Color.BLUE: tuple(blue_cycle)}
    spanning = {}
    for color, cyc in cycles.items():
        expected = {q for q in S if q.color is color}
        spanning[color] = (
            len(cyc) >= 3 and len(set(cyc)) == len(cyc) == len(expected) and set(cyc) == expected
        )
    red_edges, blue_edges = cycle_edges(cycles[Color.RED]), cycle_edges(cycles[Color.BLUE])
    counts: dict[tuple[Color, Point, Point], int] = {}
    hits = [[_safe_cross(e, f) for f in blue_edges] for e in red_edges]
    for i, e in enumerate(red_edges):
        counts[(Color.RED, *e)] = sum(hits[i])
    for j, f in enumerate(blue_edges):
        counts[(Color.BLUE, *f)] = sum(row[j] for row in hits)
    selfx = _self_intersections(Color.RED, cycles[Color.RED]) + _self_intersections(Color.BLUE, cycles[Color.BLUE])
    return CrossingReport(counts, max(counts.values(), default=0), selfx, spanning)


def check(S: Sequence[Point], pair) -> CrossingReport:
    """Verify a pair of cycles (anything with ``red_cycle``/``blue_cycle``) against ``S``."""
    return check_cycles(S, pair.red_cycle, pair.blue_cycle)


def _segment_table(pts: Sequence[Point]) -> tuple[list[tuple[int, int]], dict[tuple[int, int], int]]:
    segs = [(i, j) for i in range(len(pts)) for j in range(i + 1, len(pts))]
    return segs, {s: k for k, s in enumerate(segs)}


def _simple_polygons(pts: Sequence[Point]) -> tuple[list[list[int]], list[tuple[int, int]]]:
    """Every simple polygon through ``pts`` as a list of segment ids."""
    n = len(pts)
    segs, sid = _segment_table(pts)
    X = np.zeros((len(segs), len(segs)), dtype=bool)
    for a in range(len(segs)):
        for b in range(a + 1, len(segs)):
            (i, j), (k, l) = segs[a], segs[b]
            if len({i, j, k, l}) == 4 and crosses(pts[i], pts[j], pts[k], pts[l]):
                X[a, b] = X[b, a] = True
    polys = []
    for perm in permutations(range(1, n)):
        if n > 3 and perm[0] > perm[-1]:
            continue
        cyc = (0, *perm)
        ids = [sid[tuple(sorted((cyc[i], cyc[(i + 1) % n])))] for i in range(n)]
        if not X[np.ix_(ids, ids)].any():
            polys.append(ids)
    return polys, segs


def oracle_best_k(S: Sequence[Point]) -> int:
    """Smallest achievable maximum per-edge crossing count, by full enumeration."""
    reds = sorted(q for q in S if q.color is Color.RED)
    blues = sorted(q for q in S if q.color is Color.BLUE)
    if len(reds) > MAX_ORACLE_CYCLE or len(blues) > MAX_ORACLE_CYCLE:
        raise SizeLimit(f"oracle handles at most {MAX_ORACLE_CYCLE} points per color")
    if len(reds) < 3 or len(blues) < 3:
        raise ValueError("need at least three points of each color")
    rpolys, rsegs = _simple_polygons(reds)
    bpolys, bsegs = _simple_polygons(blues)
    C = np.zeros((len(rsegs), len(bsegs)), dtype=np.int64)
    for a, (i, j) in enumerate(rsegs):
        for b, (k, l) in enumerate(bsegs):
            C[a, b] = crosses(reds[i], reds[j], blues[k], blues[l])
    P = np.zeros((len(rpolys), len(rsegs)), dtype=np.int64)
    for r, ids in enumerate(rpolys):
        P[r, ids] = 1
    Q = np.zeros((len(bpolys), len(bsegs)), dtype=np.int64)
    for b, ids in enumerate(bpolys):
        Q[b, ids] = 1
    red_side = np.stack([(C[ids] @ Q.T).max(axis=0) for ids in rpolys])  # (NR, NB)
    blue_side = np.stack([(C[:, ids].T @ P.T).max(axis=0) for ids in bpolys])  # (NB, NR)
    return int(np.maximum(red_side, blue_side.T).min())


def oracle_spanning_paths(X: Sequence[Point], x: Point, y: Point, ell) -> tuple[int, tuple[Point, ...]]:
    """Fewest crossings with ``ell`` over all simple spanning paths from ``x`` to ``y``."""
    pts = list(dict.fromkeys(X))
    if len(pts) > MAX_ORACLE_PATH:
        raise SizeLimit(f"path oracle handles at most {MAX_ORACLE_PATH} points")
    if len(pts) == 1:
        return 0, (x,)
    middle = [q for q in pts if q != x and q != y]
    order = [x, *middle, y]
    segs, sid = _segment_table(order)
    X_ = np.zeros((len(segs), len(segs)), dtype=bool)
    for a in range(len(segs)):
        for b in range(a + 1, len(segs)):
            (i, j), (k, l) = segs[a], segs[b]
            if len({i, j, k, l}) == 4 and crosses(order[i], order[j], order[k], order[l]):
                X_[a, b] = X_[b, a] = True
    side = [ell.side(q) for q in order]
    best: tuple[int, tuple[Point, ...]] | None = None
    last = len(order) - 1
    for perm in permutations(range(1, last)):
        seq = (0, *perm, last)
        ids = [sid[tuple(sorted((seq[i], seq[i + 1])))] for i in range(last)]
        if X_[np.ix_(ids, ids)].any():
            continue
        c = sum(1 for i in range(last) if side[seq[i]] * side[seq[i + 1]] < 0)
        if best is None or c < best[0]:
            best = (c, tuple(order[i] for i in seq))
            if c == 0:
                break
    if best is None:
        raise ValueError("no simple spanning path between the given endpoints")
    return best
