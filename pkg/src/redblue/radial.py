"""Radial order of a bichromatic set around a pivot, blobs and monster-jumps."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, cmp_to_key
from typing import Iterable, Sequence

from .errors import CollinearWithPivot
from .geometry import Color, ConvexHull, Point, _cross_sign, convex_hull


def _half(pivot: Point, q: Point) -> int:
    # 0 for directions in the clockwise half-turn starting at the +x ray
    dy = q.y - pivot.y
    if dy < 0 or (dy == 0 and q.x > pivot.x):
        return 0
    return 1


def clockwise_key(pivot: Point):
    """Sort key putting points in clockwise order, starting at the +x ray."""

    def cmp(a: Point, b: Point) -> int:
        ha, hb = _half(pivot, a), _half(pivot, b)
        if ha != hb:
            return ha - hb
        return _cross_sign(pivot, a, b)  # CW (-1) means a comes first

    return cmp_to_key(cmp)


@dataclass(frozen=True)
class Blob:
    """Maximal monochromatic run of the radial order, stored in clockwise order."""

    index: int
    points: tuple[Point, ...]
    color: Color

    def __len__(self) -> int:
        return len(self.points)

    @property
    def first(self) -> Point:
        return self.points[0]

    @property
    def last(self) -> Point:
        return self.points[-1]

    @property
    def second(self) -> Point:
        return self.points[1]

    @property
    def second_to_last(self) -> Point:
        return self.points[-2]

    @cached_property
    def hull(self) -> ConvexHull:
        return convex_hull(self.points)


@dataclass(frozen=True)
class RadialOrder:
    """Clockwise cyclic order of the input around ``pivot``, split into blobs.

    ``order`` is rotated so that it starts at the first point of a blob; the
    starting point carries no meaning.
    """

    pivot: Point
    order: tuple[Point, ...]
    blobs: tuple[Blob, ...]

    def __len__(self) -> int:
        return len(self.order)

    @cached_property
    def position(self) -> dict[Point, int]:
        return {q: i for i, q in enumerate(self.order)}

    @cached_property
    def _blob_of(self) -> dict[Point, int]:
        return {q: b.index for b in self.blobs for q in b.points}

    def blob_of(self, q: Point) -> Blob:
        return self.blobs[self._blob_of[q]]

    def blob(self, i: int) -> Blob:
        return self.blobs[i % len(self.blobs)]

    def next_blob(self, X: Blob) -> Blob:
        return self.blob(X.index + 1)

    def prev_blob(self, X: Blob) -> Blob:
        return self.blob(X.index - 1)

    def next_same(self, X: Blob) -> Blob:
        """Next blob of the same color (itself when there is only one)."""
        return self.blob(X.index + 2) if len(self.blobs) > 1 else X

    def prev_same(self, X: Blob) -> Blob:
        return self.blob(X.index - 2) if len(self.blobs) > 1 else X

    def of_color(self, color: Color) -> list[Blob]:
        return [b for b in self.blobs if b.color is color]

    def angle_lt_pi(self, x: Point, y: Point) -> bool:
        """Clockwise angle from ``x`` to ``y`` about the pivot is below pi."""
        return _cross_sign(self.pivot, x, y) < 0


def _direction(pivot: Point, q: Point) -> tuple[object, int]:
    dx, dy = q.x - pivot.x, q.y - pivot.y
    if dx == 0 and dy == 0:
        raise CollinearWithPivot(f"{q} coincides with the pivot")
    return ("v" if dx == 0 else dy / dx), _half(pivot, q)


def radial_order(points: Iterable[Point], pivot: Point) -> RadialOrder:
    """Sort ``points`` clockwise around ``pivot`` and split them into blobs.

    Raises :class:`CollinearWithPivot` when two points lie on the same ray
    from the pivot, since their order would be undefined.  Points in exactly
    opposite directions are accepted; see :func:`collinear_with_pivot`.
    """
    pivot = Point(pivot.x, pivot.y)
    pts = list(points)
    rays: dict[object, Point] = {}
    for q in pts:
        key = _direction(pivot, q)
        if key in rays:
            raise CollinearWithPivot(f"{rays[key]} and {q} lie on one ray from {pivot}")
        rays[key] = q
    ordered = sorted(pts, key=clockwise_key(pivot))
    return _with_blobs(pivot, ordered)


def collinear_with_pivot(points: Iterable[Point], pivot: Point) -> bool:
    """Is the pivot on a point of the set or on a line through two of them?"""
    slopes: set[object] = set()
    for q in points:
        if q == pivot:
            return True
        key = _direction(pivot, q)[0]
        if key in slopes:
            return True
        slopes.add(key)
    return False


def _with_blobs(pivot: Point, ordered: Sequence[Point]) -> RadialOrder:
    n = len(ordered)
    if n == 0:
        return RadialOrder(pivot, (), ())
    starts = [i for i in range(n) if ordered[i].color is not ordered[i - 1].color]
    if not starts:
        return RadialOrder(pivot, tuple(ordered), (Blob(0, tuple(ordered), ordered[0].color),))
    s0 = starts[0]
    rotated = tuple(ordered[s0:]) + tuple(ordered[:s0])
    blobs: list[Blob] = []
    run: list[Point] = [rotated[0]]
    for q in rotated[1:]:
        if q.color is run[-1].color:
            run.append(q)
        else:
            blobs.append(Blob(len(blobs), tuple(run), run[0].color))
            run = [q]
    blobs.append(Blob(len(blobs), tuple(run), run[0].color))
    return RadialOrder(pivot, rotated, tuple(blobs))


def interval(order: RadialOrder, xi: Point, xj: Point) -> list[Point]:
    """Cyclic slice of the order from ``xi`` to ``xj`` inclusive."""
    i, j = order.position[xi], order.position[xj]
    seq = order.order
    if i <= j:
        return list(seq[i:j + 1])
    return list(seq[i:]) + list(seq[:j + 1])


def _check_pair(order: RadialOrder, X1: Blob, X2: Blob, color: Color) -> None:
    if X1.color is not color or X2.color is not color:
        raise ValueError(f"both blobs must be {color.value}")
    if len(order.blobs) < 4:
        raise ValueError("monster-jumps need two blobs of each color")
    if order.next_same(X1) != X2:
        raise ValueError("second blob must be the next blob of the same color")


def detect_red_monster_jump(order: RadialOrder, R1: Blob, R2: Blob) -> bool:
    """Red monster-jump from ``R1`` to the next red blob ``R2``.

    With blobs B1, R1, B2, R2 consecutive: ``|R1| > 1``, the angle from the
    second point of R1 to the first point of R2 is at least pi, and the
    segment from the last point of B1 to the first point of B2 meets hull(R1).
    """
    _check_pair(order, R1, R2, Color.RED)
    if len(R1) < 2:
        return False
    if order.angle_lt_pi(R1.second, R2.first):
        return False
    B1, B2 = order.prev_blob(R1), order.next_blob(R1)
    return R1.hull.meets_segment(B1.last, B2.first)


def detect_blue_monster_jump(order: RadialOrder, B1: Blob, B2: Blob) -> bool:
    """Blue monster-jump from ``B1`` to the next blue blob ``B2``.

    With blobs B1, R1, B2, R2 consecutive: ``|B2| > 1``, the angle from the
    last point of B1 to the second-to-last point of B2 is at least pi, and the
    segment from the last point of R1 to the first point of R2 meets hull(B2).
    """
    _check_pair(order, B1, B2, Color.BLUE)
    if len(B2) < 2:
        return False
    if order.angle_lt_pi(B1.last, B2.second_to_last):
        return False
    R1, R2 = order.next_blob(B1), order.next_blob(B2)
    return B2.hull.meets_segment(R1.last, R2.first)


def monster_jumps(order: RadialOrder) -> list[tuple[Color, int, int]]:
    """All monster-jumps as ``(color, from_blob, to_blob)`` triples."""
    if len(order.blobs) < 4:
        return []
    found = []
    for X in order.blobs:
        Y = order.next_same(X)
        if X.color is Color.RED and detect_red_monster_jump(order, X, Y):
            found.append((Color.RED, X.index, Y.index))
        elif X.color is Color.BLUE and detect_blue_monster_jump(order, X, Y):
            found.append((Color.BLUE, X.index, Y.index))
    return found


def has_any_monster_jump(order: RadialOrder) -> bool:
    return bool(monster_jumps(order))


def gap_angles_ok(order: RadialOrder) -> bool:
    """Every blob's last point sees the next same-color first point within pi."""
    if len(order.blobs) < 4:
        return False
    return all(order.angle_lt_pi(X.last, order.next_same(X).first) for X in order.blobs)
