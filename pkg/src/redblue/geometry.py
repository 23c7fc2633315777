"""Exact planar predicates over rational coordinates.

Coordinates are :class:`fractions.Fraction` values.  Every predicate reduces to
the sign of an integer expression, so no floating point is ever involved.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum, IntEnum
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

from .errors import DegenerateOverlap, GeneralPositionError

Number = Union[int, Fraction, str]


class Color(str, Enum):
    RED = "red"
    BLUE = "blue"

    @property
    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


class Orientation(IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


def as_fraction(value: Number) -> Fraction:
    """Parse ``value`` exactly.  Floats are refused on purpose."""
    if isinstance(value, float):
        raise TypeError("floating point coordinates are not accepted; use str or Fraction")
    return Fraction(value)


@dataclass(frozen=True)
class Point:
    """A point with exact coordinates and an optional color tag.

    Equality and hashing use the coordinates only, so a recolored copy of a
    point compares equal to the original.
    """

    x: Fraction
    y: Fraction
    color: Color | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        x, y = as_fraction(self.x), as_fraction(self.y)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        # integer views for the orientation kernel
        object.__setattr__(self, "_k", (x.numerator, x.denominator, y.numerator, y.denominator))

    def recolored(self, color: Color | None) -> "Point":
        return Point(self.x, self.y, color)

    def __repr__(self) -> str:
        tag = "" if self.color is None else f", {self.color.value}"
        return f"Point({self.x}, {self.y}{tag})"

    def __lt__(self, other: "Point") -> bool:
        return (self.x, self.y) < (other.x, other.y)


def point(x: Number, y: Number, color: Color | str | None = None) -> Point:
    """Convenience constructor accepting ints, strings like ``"3/4"`` and color names."""
    if isinstance(color, str):
        color = Color(color)
    return Point(as_fraction(x), as_fraction(y), color)


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError("segment endpoints must differ")


def _cross_sign(a: Point, b: Point, c: Point) -> int:
    # sign of (b - a) x (c - a); all denominators are positive
    an, ad, am, ae = a._k  # type: ignore[attr-defined]
    bn, bd, bm, be = b._k  # type: ignore[attr-defined]
    cn, cd, cm, ce = c._k  # type: ignore[attr-defined]
    if ad == bd == cd == ae == be == ce == 1:
        v = (bn - an) * (cm - am) - (bm - am) * (cn - an)
    else:
        ux_n, ux_d = bn * ad - an * bd, bd * ad
        uy_n, uy_d = bm * ae - am * be, be * ae
        vx_n, vx_d = cn * ad - an * cd, cd * ad
        vy_n, vy_d = cm * ae - am * ce, ce * ae
        v = ux_n * vy_n * uy_d * vx_d - uy_n * vx_n * ux_d * vy_d
    return (v > 0) - (v < 0)


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    """Turn direction of ``a -> b -> c``: CCW for a left turn, CW for a right turn."""
    return Orientation(_cross_sign(a, b, c))


def _between(a: Point, b: Point, c: Point) -> bool:
    # c collinear with a, b: is c on the closed segment [a, b]?
    return min(a.x, b.x) <= c.x <= max(a.x, b.x) and min(a.y, b.y) <= c.y <= max(a.y, b.y)


def crosses(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Do the open segments ``ab`` and ``cd`` meet in exactly one interior point?

    Endpoint contact is not a crossing.  Collinear overlap raises
    :class:`DegenerateOverlap`.
    """
    o1 = _cross_sign(a, b, c)
    o2 = _cross_sign(a, b, d)
    if o1 == 0 and o2 == 0:
        lo1, hi1 = sorted((a, b))
        lo2, hi2 = sorted((c, d))
        if max(lo1, lo2) < min(hi1, hi2):
            raise DegenerateOverlap(f"collinear overlapping segments {a}-{b} and {c}-{d}")
        return False
    if o1 * o2 >= 0:
        return False
    o3 = _cross_sign(c, d, a)
    o4 = _cross_sign(c, d, b)
    return o3 * o4 < 0


def segments_cross(s1: Segment, s2: Segment) -> bool:
    return crosses(s1.a, s1.b, s2.a, s2.b)


def segments_meet(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Closed-segment intersection test (touching counts)."""
    o1 = _cross_sign(a, b, c)
    o2 = _cross_sign(a, b, d)
    o3 = _cross_sign(c, d, a)
    o4 = _cross_sign(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return (
        (o1 == 0 and _between(a, b, c))
        or (o2 == 0 and _between(a, b, d))
        or (o3 == 0 and _between(c, d, a))
        or (o4 == 0 and _between(c, d, b))
    )


def intersection_point(a: Point, b: Point, c: Point, d: Point) -> Point:
    """Intersection of the lines ``ab`` and ``cd`` (must not be parallel)."""
    rx, ry = b.x - a.x, b.y - a.y
    sx, sy = d.x - c.x, d.y - c.y
    denom = rx * sy - ry * sx
    if denom == 0:
        raise ValueError("parallel lines have no unique intersection")
    t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom
    return Point(a.x + t * rx, a.y + t * ry)


@dataclass(frozen=True)
class ConvexHull:
    """Hull vertices counterclockwise, starting at the lexicographic minimum."""

    vertices: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def vertex_set(self) -> frozenset[Point]:
        return frozenset(self.vertices)

    def edges(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        if len(v) < 2:
            return []
        if len(v) == 2:
            return [(v[0], v[1])]
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def locate(self, q: Point) -> int:
        """+1 strictly inside, 0 on the boundary, -1 outside."""
        v = self.vertices
        if len(v) == 1:
            return 0 if q == v[0] else -1
        if len(v) == 2:
            return 0 if _cross_sign(v[0], v[1], q) == 0 and _between(v[0], v[1], q) else -1
        on_edge = False
        for i in range(len(v)):
            s = _cross_sign(v[i], v[(i + 1) % len(v)], q)
            if s < 0:
                return -1
            if s == 0:
                on_edge = True
        return 0 if on_edge else 1

    def contains(self, q: Point, strict: bool = False) -> bool:
        loc = self.locate(q)
        return loc > 0 if strict else loc >= 0

    def meets_segment(self, a: Point, b: Point) -> bool:
        """Does the closed segment ``ab`` touch the closed hull?"""
        if self.locate(a) >= 0 or self.locate(b) >= 0:
            return True
        v = self.vertices
        if len(v) == 1:
            return _cross_sign(a, b, v[0]) == 0 and _between(a, b, v[0])
        return any(segments_meet(a, b, p, q) for p, q in self.edges())

    def meets_line(self, a: Point, b: Point) -> bool:
        """Does the infinite line through ``a`` and ``b`` touch the hull?"""
        signs = {_cross_sign(a, b, p) for p in self.vertices}
        return 0 in signs or (1 in signs and -1 in signs)


def convex_hull(points: Iterable[Point]) -> ConvexHull:
    """Andrew's monotone chain; collinear boundary points are dropped."""
    pts = sorted(set(points))
    if not pts:
        raise ValueError("convex hull of an empty set")
    if len(pts) <= 2:
        return ConvexHull(tuple(pts))

    def chain(seq: Sequence[Point]) -> list[Point]:
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and _cross_sign(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(pts[::-1])
    return ConvexHull(tuple(lower[:-1] + upper[:-1]))


def hulls_meet(h1: ConvexHull, h2: ConvexHull) -> bool:
    """Closed intersection test for two convex hulls."""
    if any(h2.locate(p) >= 0 for p in h1.vertices):
        return True
    if any(h1.locate(p) >= 0 for p in h2.vertices):
        return True
    return any(segments_meet(a, b, c, d) for a, b in h1.edges() for c, d in h2.edges())


def _as_hull(X: ConvexHull | Iterable[Point]) -> ConvexHull:
    return X if isinstance(X, ConvexHull) else convex_hull(X)


def sees(y: Point, x: Point, X: ConvexHull | Iterable[Point]) -> bool:
    """Does ``y`` see ``x`` across the opaque hull of ``X``?

    True iff the segment ``xy`` meets the hull only at ``x``; ``x`` must
    therefore be a hull vertex.  ``y`` has to lie outside the hull.
    """
    hull = _as_hull(X)
    if hull.locate(y) >= 0:
        raise ValueError(f"{y} lies inside or on the hull")
    v = hull.vertices
    if x not in hull.vertex_set:
        return False
    n = len(v)
    if n == 1:
        return True
    i = v.index(x)
    if n == 2:
        other = v[1 - i]
        # hidden only when y lies on the ray from x through the other vertex
        return not (_cross_sign(x, other, y) == 0 and _dot_sign(x, other, y) > 0)
    nxt, prv = v[(i + 1) % n], v[i - 1]
    # y is hidden iff it lies in the closed cone spanned at x by the two hull edges
    return not (_cross_sign(x, nxt, y) >= 0 and _cross_sign(x, y, prv) >= 0)


def _dot_sign(o: Point, a: Point, b: Point) -> int:
    d = (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y)
    return (d > 0) - (d < 0)


def see_each_other(x: Point, X: ConvexHull | Iterable[Point], y: Point,
                   Y: ConvexHull | Iterable[Point]) -> bool:
    hx, hy = _as_hull(X), _as_hull(Y)
    if hulls_meet(hx, hy):
        raise ValueError("see_each_other needs disjoint hulls")
    return sees(y, x, hx) and sees(x, y, hy)


def angle_at_most_pi(p: Point, x: Point, y: Point) -> bool:
    """Is the clockwise angle from ray ``p->x`` to ray ``p->y`` at most pi?"""
    if x == p or y == p:
        raise ValueError("angle undefined at the apex itself")
    return _cross_sign(p, x, y) <= 0


def angle_less_than_pi(p: Point, x: Point, y: Point) -> bool:
    """Strict version of :func:`angle_at_most_pi` (for non-collinear triples)."""
    if x == p or y == p:
        raise ValueError("angle undefined at the apex itself")
    return _cross_sign(p, x, y) < 0


def check_general_position(points: Sequence[Point]) -> None:
    """Raise :class:`GeneralPositionError` on duplicates or collinear triples.

    Runs in O(n^2) by bucketing the directions seen from each point.
    """
    pts = list(points)
    if len(set(pts)) != len(pts):
        raise GeneralPositionError("duplicate points")
    for i, p in enumerate(pts):
        seen: dict[object, Point] = {}
        for q in pts[i + 1:]:
            dx, dy = q.x - p.x, q.y - p.y
            key: object = "v" if dx == 0 else dy / dx
            if key in seen:
                raise GeneralPositionError(f"collinear points {p}, {seen[key]}, {q}")
            seen[key] = q
