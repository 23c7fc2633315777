"""Non-self-intersecting spanning paths inside a blob, and simple polygonization."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Sequence

from .errors import InputError, InternalInvariantViolation
from .geometry import Point, _cross_sign, convex_hull, crosses, sees


@dataclass(frozen=True)
class Line:
    """Directed line through two distinct anchor points."""

    p: Point
    q: Point

    def __post_init__(self) -> None:
        if self.p == self.q:
            raise ValueError("a line needs two distinct anchors")

    def side(self, z: Point) -> int:
        return _cross_sign(self.p, self.q, z)


@dataclass(frozen=True)
class BlobPath:
    vertices: tuple[Point, ...]

    @property
    def endpoints(self) -> tuple[Point, Point]:
        return self.vertices[0], self.vertices[-1]

    def edges(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        return [(v[i], v[i + 1]) for i in range(len(v) - 1)]


def line_crossings(vertices: Sequence[Point], ell: Line) -> int:
    """Number of path edges whose endpoints lie strictly on opposite sides of ``ell``."""
    sides = [ell.side(v) for v in vertices]
    return sum(1 for s, t in zip(sides, sides[1:]) if s * t < 0)


def is_simple_path(vertices: Sequence[Point]) -> bool:
    edges = [(vertices[i], vertices[i + 1]) for i in range(len(vertices) - 1)]
    for i in range(len(edges)):
        for j in range(i + 2, len(edges)):
            if crosses(*edges[i], *edges[j]):
                return False
    return True


def _closer_in_angle(o: Point, target: Point, u: Point, v: Point) -> bool:
    """Is the angle between ``o->u`` and ``o->target`` smaller than for ``v``?"""
    wx, wy = target.x - o.x, target.y - o.y

    def score(z: Point) -> tuple[Fraction, Fraction]:
        zx, zy = z.x - o.x, z.y - o.y
        return zx * wx + zy * wy, zx * zx + zy * zy

    du, nu = score(u)
    dv, nv = score(v)
    # compare du/sqrt(nu) > dv/sqrt(nv) without square roots
    if (du > 0) != (dv > 0):
        return du > 0
    lhs, rhs = du * du * nv, dv * dv * nu
    return lhs > rhs if du > 0 else lhs < rhs


def spanning_path(X: Iterable[Point], x: Point, y: Point, ell: Line) -> BlobPath:
    """Spanning path of ``X`` from ``x`` to ``y`` meeting ``ell`` as rarely as possible.

    Greedy peeling: from the current endpoint step to a hull vertex of the
    remaining points that it sees, preferring one on its own side of ``ell``
    and, among those, the one closest in angle to ``y``.  The resulting path
    crosses ``ell`` 0 times when ``X`` is on one side, once when ``x`` and
    ``y`` are separated, and twice otherwise.

    The start must be a vertex of ``hull(X)``; if only ``y`` is, the path is
    built from ``y`` and reversed.
    """
    pts = list(dict.fromkeys(X))
    if x not in pts or y not in pts:
        raise InputError("path endpoints must belong to the point set")
    if any(ell.side(z) == 0 for z in pts):
        raise InputError("a point of the set lies on the line")
    if len(pts) == 1:
        return BlobPath((x,))
    if x == y:
        raise InputError("endpoints must differ when the set has several points")
    hull = convex_hull(pts)
    if x not in hull.vertex_set:
        if y in hull.vertex_set:
            return BlobPath(spanning_path(pts, y, x, ell).vertices[::-1])
        raise InputError("one endpoint has to be a vertex of the convex hull")

    path = [x]
    remaining = [z for z in pts if z != x]
    cur = x
    while len(remaining) > 1:
        h = convex_hull(remaining)
        visible = [v for v in h.vertices if v != y and sees(cur, v, h)]
        if not visible:
            raise InternalInvariantViolation(f"{cur} sees no admissible hull vertex")
        own = [v for v in visible if ell.side(v) == ell.side(cur)]
        pool = own or visible
        best = pool[0]
        for v in pool[1:]:
            if _closer_in_angle(cur, y, v, best):
                best = v
        path.append(best)
        remaining.remove(best)
        cur = best
    path.append(y)
    return BlobPath(tuple(path))


def predicted_crossings(X: Iterable[Point], x: Point, y: Point, ell: Line) -> int:
    """The crossing count a best path must have: 0, 1 or 2 depending on the sides."""
    sides = {ell.side(z) for z in X}
    if len(sides) == 1:
        return 0
    return 1 if ell.side(x) != ell.side(y) else 2


def close_single_blob(X: Iterable[Point]) -> tuple[Point, ...]:
    """Simple polygon through all of ``X``: angular sort around the lowest point."""
    pts = list(dict.fromkeys(X))
    if len(pts) < 3:
        raise InputError("a spanning cycle needs at least three points")
    p0 = min(pts, key=lambda q: (q.y, q.x))
    rest = [q for q in pts if q != p0]
    # every other point lies in the closed upper half-plane of p0
    rest.sort(key=cmp_to_key(lambda a, b: -_cross_sign(p0, a, b)))
    cycle = (p0, *rest)
    if not is_simple_cycle(cycle):
        raise InternalInvariantViolation("angular polygonization is not simple")
    return cycle


def is_simple_cycle(cycle: Sequence[Point]) -> bool:
    n = len(cycle)
    edges = [(cycle[i], cycle[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if crosses(*edges[i], *edges[j]):
                return False
    return True
