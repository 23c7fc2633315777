"""Choosing the pivot of the radial order.

For properly overlapping hulls the pivot sits just inside both hulls next to a
crossing of their boundaries; when one hull contains the other it sits just
inside the inner hull next to one of its vertices.  "Sufficiently close" is
realized by halving the offset until every property needed downstream can be
checked directly on the resulting radial order.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import InputError, PivotSearchExhausted
from .geometry import Color, ConvexHull, Point, _cross_sign, convex_hull, crosses, hulls_meet, intersection_point
from .radial import RadialOrder, collinear_with_pivot, gap_angles_ok, has_any_monster_jump, radial_order

MAX_HALVINGS = 256


class HullRelation(str, Enum):
    DISJOINT = "disjoint"
    PROPER_OVERLAP = "proper_overlap"
    RED_CONTAINS_BLUE = "red_contains_blue"
    BLUE_CONTAINS_RED = "blue_contains_red"


class Provenance(str, Enum):
    OVERLAP_NEAR_Q = "overlap_near_q"
    CONTAIN_CASE1 = "contain_case1"
    CONTAIN_CASE2 = "contain_case2"


@dataclass(frozen=True)
class PivotCandidate:
    """An admissible pivot together with the radial order it induces.

    ``order`` is built on the color-swapped set when ``colors_swapped`` is set.
    """

    p: Point
    provenance: Provenance
    epsilon: Fraction
    delta: Fraction | None
    colors_swapped: bool
    halvings: int
    order: RadialOrder
    anchor: Point  # the boundary crossing q, or the inner hull vertex b_1


@dataclass(frozen=True)
class PivotChoice:
    relation: HullRelation
    candidate: PivotCandidate | None  # None for disjoint hulls

    @property
    def colors_swapped(self) -> bool:
        return self.candidate is not None and self.candidate.colors_swapped


def split_colors(S: Sequence[Point]) -> tuple[list[Point], list[Point]]:
    reds = [q for q in S if q.color is Color.RED]
    blues = [q for q in S if q.color is Color.BLUE]
    return reds, blues


def swap_colors(S: Sequence[Point]) -> list[Point]:
    return [q.recolored(q.color.other) for q in S]


def _require_three(S: Sequence[Point]) -> tuple[list[Point], list[Point]]:
    reds, blues = split_colors(S)
    if len(reds) < 3 or len(blues) < 3:
        raise InputError("need at least three points of each color")
    return reds, blues


def classify_hulls(S: Sequence[Point]) -> HullRelation:
    reds, blues = _require_three(S)
    hr, hb = convex_hull(reds), convex_hull(blues)
    if not hulls_meet(hr, hb):
        return HullRelation.DISJOINT
    if all(hr.contains(q) for q in hb.vertices):
        return HullRelation.RED_CONTAINS_BLUE
    if all(hb.contains(q) for q in hr.vertices):
        return HullRelation.BLUE_CONTAINS_RED
    return HullRelation.PROPER_OVERLAP


def clockwise_vertices(hull: ConvexHull) -> list[Point]:
    v = list(hull.vertices)
    return [v[0]] + v[:0:-1]


def admissible_order(S: Sequence[Point], p: Point, hulls: Sequence[ConvexHull]) -> RadialOrder | None:
    """Radial order about ``p`` if ``p`` is a usable pivot, else ``None``.

    Usable means: strictly inside every hull in ``hulls``, not collinear with
    two input points, every same-color gap below pi and no monster-jump.
    """
    if any(h.locate(p) <= 0 for h in hulls):
        return None
    if collinear_with_pivot(S, p):
        return None
    order = radial_order(S, p)
    if not gap_angles_ok(order) or has_any_monster_jump(order):
        return None
    return order


def _offset(base: Point, d: tuple[Fraction, Fraction], eps: Fraction) -> Point:
    return Point(base.x + eps * d[0], base.y + eps * d[1])


def overlap_candidates(S: Sequence[Point]) -> Iterator[PivotCandidate]:
    """Pivots near boundary crossings of two properly overlapping hulls.

    One candidate per crossing of a red hull edge with a blue hull edge, in a
    fixed order.  Colors are swapped when needed so that, clockwise around
    the crossing, the endpoints read blue, red, blue, red.
    """
    reds, blues = _require_three(S)
    hr, hb = convex_hull(reds), convex_hull(blues)
    red_cw, blue_cw = clockwise_vertices(hr), clockwise_vertices(hb)
    swapped_S = None
    for i in range(len(red_cw)):
        r1, r2 = red_cw[i], red_cw[(i + 1) % len(red_cw)]
        for j in range(len(blue_cw)):
            b1, b2 = blue_cw[j], blue_cw[(j + 1) % len(blue_cw)]
            if not crosses(r1, r2, b1, b2):
                continue
            q = intersection_point(r1, r2, b1, b2)
            swapped = _cross_sign(q, b1, r1) > 0
            if swapped:
                (r1, r2), (b1, b2) = (b1, b2), (r1, r2)
                if swapped_S is None:
                    swapped_S = swap_colors(S)
                work = swapped_S
            else:
                work = list(S)
            # endpoints lying on the inner side of the other hull's edge
            r_in = r1 if _cross_sign(b1, b2, r1) < 0 else r2
            b_in = b1 if _cross_sign(r1, r2, b1) < 0 else b2
            d = (r_in.x + b_in.x - 2 * q.x, r_in.y + b_in.y - 2 * q.y)
            for k in range(MAX_HALVINGS + 1):
                eps = Fraction(1, 2 ** k)
                p = _offset(q, d, eps)
                order = admissible_order(work, p, (hr, hb))
                if order is not None:
                    yield PivotCandidate(p, Provenance.OVERLAP_NEAR_Q, eps, None, swapped, k, order, q)
                    break


def pivot_overlap(S: Sequence[Point]) -> PivotCandidate:
    for cand in overlap_candidates(S):
        return cand
    raise PivotSearchExhausted("no admissible pivot near any boundary crossing")


def containment_candidates(S: Sequence[Point]) -> Iterator[PivotCandidate]:
    """Pivots just inside the blue hull, for a red hull containing the blue one.

    Walk the blue hull clockwise (b_1, ..., b_k).  Relabel so that a red point
    lies beyond the edge b_k b_1 but not beyond b_1 b_2, pick the red point
    r_2 beyond b_1 b_2 that comes last before b_2 clockwise around b_1, and
    offset b_1 slightly along b_1 -> b_k (when r_2 is not beyond b_k b_1) or
    along r_2 -> b_1 (when it is), tilted counterclockwise.  Every valid
    relabeling yields one candidate.
    """
    reds, blues = _require_three(S)
    hr, hb = convex_hull(reds), convex_hull(blues)
    ring = clockwise_vertices(hb)
    k = len(ring)

    def beyond(b: list[Point], i: int, z: Point) -> bool:
        # open half-plane of edge (b_i, b_i+1) free of blue points
        return _cross_sign(b[i % k], b[(i + 1) % k], z) > 0

    for i in range(k):
        if not any(beyond(ring, i, r) and not beyond(ring, i + 1, r) for r in reds):
            continue
        b = ring[i + 1:] + ring[:i + 1]
        outside_first = [r for r in reds if beyond(b, 0, r)]
        if not outside_first:
            continue
        r2 = outside_first[0]
        for r in outside_first[1:]:
            if _cross_sign(b[0], r2, r) < 0:
                r2 = r
        if beyond(b, k - 1, r2):
            provenance = Provenance.CONTAIN_CASE2
            v = (b[0].x - r2.x, b[0].y - r2.y)
        else:
            provenance = Provenance.CONTAIN_CASE1
            v = (b[k - 1].x - b[0].x, b[k - 1].y - b[0].y)
        for h in range(MAX_HALVINGS + 1):
            t = Fraction(1, 2 ** h)
            d = (v[0] - t * v[1], v[1] + t * v[0])
            p = _offset(b[0], d, t)
            order = admissible_order(S, p, (hr, hb))
            # close enough that b_1 is flanked by red on both sides
            if order is not None and len(order.blob_of(b[0])) == 1:
                yield PivotCandidate(p, provenance, t, t, False, h, order, b[0])
                break


def pivot_containment(S: Sequence[Point]) -> PivotCandidate:
    for cand in containment_candidates(S):
        return cand
    raise PivotSearchExhausted("no admissible pivot near any vertex of the inner hull")


def pivot_candidates(S: Sequence[Point], relation: HullRelation | None = None) -> Iterator[PivotCandidate]:
    """All candidates in preference order; the first one is the canonical choice."""
    relation = relation or classify_hulls(S)
    if relation is HullRelation.DISJOINT:
        return
    if relation is HullRelation.PROPER_OVERLAP:
        yield from overlap_candidates(S)
    elif relation is HullRelation.RED_CONTAINS_BLUE:
        yield from containment_candidates(S)
    else:
        for cand in containment_candidates(swap_colors(S)):
            yield replace(cand, colors_swapped=True)


def choose_pivot(S: Sequence[Point]) -> PivotChoice:
    relation = classify_hulls(S)
    if relation is HullRelation.DISJOINT:
        return PivotChoice(relation, None)
    for cand in pivot_candidates(S, relation):
        return PivotChoice(relation, cand)
    raise PivotSearchExhausted(f"no admissible pivot for {relation.value} hulls")
