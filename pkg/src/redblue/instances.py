"""Seeded random bichromatic instances in general position."""

from __future__ import annotations

import math
import random

from .errors import InputError
from .geometry import Color, Point, _cross_sign
from .pivot import HullRelation, classify_hulls

SHAPES = ("overlap", "contain", "disjoint", "random")

_WANTED = {
    "overlap": {HullRelation.PROPER_OVERLAP},
    "contain": {HullRelation.RED_CONTAINS_BLUE},
    "disjoint": {HullRelation.DISJOINT},
}


def _fits(pts: list[Point], q: Point) -> bool:
    if q in pts:
        return False
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if _cross_sign(pts[i], pts[j], q) == 0:
                return False
    return True


def _place(rng: random.Random, pts: list[Point], color: Color, box: tuple[int, int, int, int]) -> None:
    x0, y0, x1, y1 = box
    while True:
        q = Point(rng.randint(x0, x1), rng.randint(y0, y1), color)
        if _fits(pts, q):
            pts.append(q)
            return


def _draw(rng: random.Random, n_red: int, n_blue: int, shape: str) -> list[Point]:
    pts: list[Point] = []
    if shape == "disjoint":
        for _ in range(n_red):
            _place(rng, pts, Color.RED, (0, 0, 450, 1000))
        for _ in range(n_blue):
            _place(rng, pts, Color.BLUE, (550, 0, 1000, 1000))
    elif shape == "contain":
        for box in ((0, 0, 100, 100), (900, 0, 1000, 100), (400, 900, 600, 1000)):
            _place(rng, pts, Color.RED, box)
        for _ in range(n_red - 3):
            _place(rng, pts, Color.RED, (0, 0, 1000, 1000))
        for _ in range(n_blue):
            _place(rng, pts, Color.BLUE, (380, 250, 620, 550))
    elif shape == "overlap":
        for _ in range(n_red):
            _place(rng, pts, Color.RED, (0, 0, 650, 650))
        for _ in range(n_blue):
            _place(rng, pts, Color.BLUE, (350, 350, 1000, 1000))
    elif shape == "random":
        colors = [Color.RED] * n_red + [Color.BLUE] * n_blue
        rng.shuffle(colors)
        for c in colors:
            _place(rng, pts, c, (0, 0, 1000, 1000))
    else:
        raise InputError(f"unknown shape {shape!r}; expected one of {SHAPES}")
    return pts


def generate(n_red: int, n_blue: int, seed: int, shape: str = "random") -> list[Point]:
    """Random instance with the requested hull relation, deterministic per seed."""
    if n_red < 3 or n_blue < 3:
        raise InputError("need at least three points of each color")
    if shape not in SHAPES:
        raise InputError(f"unknown shape {shape!r}; expected one of {SHAPES}")
    rng = random.Random(f"{seed}:{n_red}:{n_blue}:{shape}")
    wanted = _WANTED.get(shape)
    for _ in range(1000):
        pts = _draw(rng, n_red, n_blue, shape)
        if wanted is None or classify_hulls(pts) in wanted:
            return pts
    raise InputError(f"could not draw a {shape} instance with {n_red}+{n_blue} points")


def mixed(seed: int, low: int = 3, high: int = 15) -> list[Point]:
    """Instance with random sizes and a hull relation cycling through all four kinds."""
    rng = random.Random(seed)
    n_red, n_blue = rng.randint(low, high), rng.randint(low, high)
    kind = seed % 5
    if kind == 4:
        # blue hull containing the red one
        pts = generate(n_blue, n_red, seed, "contain")
        return [q.recolored(q.color.other) for q in pts]
    return generate(n_red, n_blue, seed, ("overlap", "contain", "disjoint", "random")[kind])



def _polar(rng: random.Random, deg: float, r: float, jitter: float) -> tuple[int, int]:
    a = math.radians(deg + rng.uniform(-jitter, jitter))
    r *= rng.uniform(0.93, 1.07)
    return round(1000 * r * math.cos(a)), round(1000 * r * math.sin(a))


def forcing_layout(seed: int) -> tuple[list[Point], Point]:
    """A point set and pivot whose canonical jump configuration has a 4-forcing.

    Six blobs clockwise around the origin, B1 R1 B2 R2 B3 R3.  The red chord
    from R1 to R2 passes over B2, whose end points sit beyond the chord while
    some middle points dip below it; B1 and B3 hug the pivot so both blue jump
    edges at B2 cut the chord.  Odd seeds mirror the picture and swap colors,
    which puts the center on a blue edge instead.  Candidates are jittered and
    the first one whose order actually shows a forcing (and is free of
    monster-jumps) is returned.
    """
    from .jump import canonical_config, find_4_forcings
    from .radial import collinear_with_pivot, gap_angles_ok, has_any_monster_jump, radial_order

    rng = random.Random(f"forcing:{seed}")
    origin = Point(0, 0)
    for _ in range(1000):
        raw: list[tuple[tuple[int, int], Color]] = []
        raw += [(_polar(rng, 185 - 8 * i, rng.uniform(0.15, 0.35), 3), Color.BLUE) for i in range(rng.randint(1, 3))]
        raw += [(_polar(rng, 152 - 5 * i, 1.0, 2), Color.RED) for i in range(rng.randint(1, 2))]
        k = rng.randint(3, 6)
        for i in range(k):
            deg = 110 - 40 * i / (k - 1)
            r = 1.1 if i in (0, k - 1) else rng.uniform(0.2, 1.2)
            raw.append((_polar(rng, deg, r, 2), Color.BLUE))
        raw += [(_polar(rng, 28 - 5 * i, 1.0, 2), Color.RED) for i in range(rng.randint(1, 2))]
        raw += [(_polar(rng, -5 - 8 * i, rng.uniform(0.15, 0.35), 3), Color.BLUE) for i in range(rng.randint(1, 3))]
        raw += [(_polar(rng, -90 + 20 * i, rng.uniform(0.6, 1.0), 5), Color.RED) for i in range(rng.randint(1, 3))]
        mirror = seed % 2 == 1
        pts: list[Point] = []
        for (x, y), c in raw:
            q = Point(-x, y, c.other) if mirror else Point(x, y, c)
            if not _fits(pts, q):
                break
            pts.append(q)
        else:
            if collinear_with_pivot(pts, origin):
                continue
            order = radial_order(pts, origin)
            if not gap_angles_ok(order) or has_any_monster_jump(order):
                continue
            if find_4_forcings(canonical_config(order)):
                return pts, origin
    raise InputError(f"no forcing layout found for seed {seed}")
