"""Shared constructions for the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from redblue.geometry import Color, Point, _cross_sign

# six points at 0, 60, ..., 300 degrees, exact rational stand-ins for the unit circle
HEXAGON = [(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)]


def alternating_hexagon() -> list[Point]:
    colors = [Color.RED, Color.BLUE] * 3
    return [Point(x, y, c) for (x, y), c in zip(HEXAGON, colors)]


def in_general_position(pts) -> bool:
    pts = list(pts)
    if len(set(pts)) != len(pts):
        return False
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if _cross_sign(pts[i], pts[j], pts[k]) == 0:
                    return False
    return True


coords = st.integers(min_value=-30, max_value=30)
points = st.builds(Point, coords, coords)


@st.composite
def general_sets(draw, min_size=3, max_size=9):
    """Point sets without duplicates or collinear triples."""
    pts: list[Point] = []
    target = draw(st.integers(min_size, max_size))
    for _ in range(target * 4):
        if len(pts) == target:
            break
        q = draw(points)
        if in_general_position(pts + [q]):
            pts.append(q)
    if len(pts) < min_size:
        from hypothesis import reject
        reject()
    return pts


def random_path_case(rng, max_size=9):
    """A random (X, x, y, ell) for the blob path construction, x on the hull of X."""
    from redblue.geometry import convex_hull
    from redblue.paths import Line

    while True:
        n = rng.randint(2, max_size)
        X: list[Point] = []
        while len(X) < n:
            q = Point(rng.randint(0, 60), rng.randint(0, 60))
            if in_general_position(X + [q]):
                X.append(q)
        p = Point(rng.randint(-5, 65), rng.randint(-5, 65))
        q = Point(rng.randint(-5, 65), rng.randint(-5, 65))
        if p == q:
            continue
        ell = Line(p, q)
        if any(ell.side(z) == 0 for z in X):
            continue
        x = rng.choice(convex_hull(X).vertices)
        y = rng.choice([z for z in X if z != x])
        return X, x, y, ell


def random_blob_order(rng, max_size=20):
    """A radial order with at least four blobs, colors laid out in angular runs.

    Returns ``None`` when the draw is unusable (pivot collinear with two points).
    """
    from redblue.radial import clockwise_key, collinear_with_pivot, radial_order

    n = rng.randint(6, max_size)
    pts: list[Point] = []
    while len(pts) < n:
        q = Point(rng.randint(-100, 100), rng.randint(-100, 100))
        if in_general_position(pts + [q]):
            pts.append(q)
    pivot = Point(Fraction(rng.randint(-300, 300), 7), Fraction(rng.randint(-300, 300), 11))
    if collinear_with_pivot(pts, pivot):
        return None
    pts.sort(key=clockwise_key(pivot))
    colors: list[Color] = []
    c = rng.choice([Color.RED, Color.BLUE])
    while len(colors) < n:
        colors += [c] * rng.randint(1, 4)
        c = c.other
    order = radial_order([q.recolored(k) for q, k in zip(pts, colors[:n])], pivot)
    return order if len(order.blobs) >= 4 else None
