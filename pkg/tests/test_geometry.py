from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from redblue.errors import DegenerateOverlap, GeneralPositionError
from redblue.geometry import (
    Color,
    Orientation,
    Point,
    Segment,
    angle_at_most_pi,
    angle_less_than_pi,
    check_general_position,
    convex_hull,
    crosses,
    hulls_meet,
    intersection_point,
    orientation,
    point,
    see_each_other,
    sees,
    segments_cross,
    segments_meet,
)

from helpers import general_sets, points


def P(x, y):
    return point(x, y)


def test_orientation_examples():
    assert orientation(P(0, 0), P(1, 0), P(0, 1)) is Orientation.CCW
    assert orientation(P(0, 0), P(1, 0), P(2, 0)) is Orientation.COLLINEAR
    assert orientation(P(0, 0), P(0, 1), P(1, 0)) is Orientation.CW


def test_point_is_exact_and_compares_by_coordinates():
    a = point("1/2", 3, "red")
    assert a.x == Fraction(1, 2) and a.color is Color.RED
    assert a == point(Fraction(2, 4), 3, "blue")
    assert len({a, a.recolored(Color.BLUE)}) == 1
    with pytest.raises(TypeError):
        Point(0.5, 1)


def test_segments_cross_examples():
    assert segments_cross(Segment(P(0, 0), P(2, 2)), Segment(P(0, 2), P(2, 0)))
    assert not segments_cross(Segment(P(0, 0), P(1, 0)), Segment(P(1, 0), P(2, 1)))
    assert not segments_cross(Segment(P(0, 0), P(1, 0)), Segment(P(0, 1), P(1, 1)))


def test_collinear_overlap_is_an_error():
    with pytest.raises(DegenerateOverlap):
        crosses(P(0, 0), P(2, 0), P(1, 0), P(3, 0))


def test_segment_needs_distinct_endpoints():
    with pytest.raises(ValueError):
        Segment(P(1, 1), P(1, 1))


def test_segments_meet_is_closed():
    assert segments_meet(P(0, 0), P(1, 0), P(1, 0), P(2, 1))
    assert segments_meet(P(0, 0), P(2, 0), P(1, 0), P(1, 5))  # T-junction
    assert not segments_meet(P(0, 0), P(1, 0), P(0, 1), P(1, 1))


def test_intersection_point_is_exact():
    assert intersection_point(P(0, 0), P(3, 1), P(0, 1), P(3, 0)) == point("3/2", "1/2")


def test_hull_examples():
    assert convex_hull([P(0, 0), P(2, 0), P(1, 1), P(1, "1/2")]).vertices == (P(0, 0), P(2, 0), P(1, 1))
    assert convex_hull([P(0, 0)]).vertices == (P(0, 0),)
    assert convex_hull([P(1, 1), P(0, 1), P(1, 0), P(0, 0)]).vertices == (P(0, 0), P(1, 0), P(1, 1), P(0, 1))


def test_hull_locate():
    h = convex_hull([P(0, 0), P(4, 0), P(0, 4)])
    assert h.locate(P(1, 1)) == 1
    assert h.locate(P(2, 0)) == 0
    assert h.locate(P(3, 3)) == -1


def test_sees_examples():
    tri = [P(0, 0), P(2, 0), P(1, 1)]
    assert sees(P(3, 0), P(2, 0), tri)
    assert not sees(P(3, 0), P(0, 0), tri)
    X = [P(0, 0), P(2, 0), P(1, 1), P(1, "1/4")]
    assert sees(P(0, 5), P(1, 1), X)
    assert not sees(P(0, 5), P(1, "1/4"), X)


def test_sees_rejects_viewer_inside():
    with pytest.raises(ValueError):
        sees(P(1, "1/2"), P(0, 0), [P(0, 0), P(2, 0), P(1, 1)])


def test_sees_degenerate_hulls():
    assert sees(P(5, 5), P(0, 0), [P(0, 0)])
    seg = [P(0, 0), P(2, 0)]
    assert not sees(P(3, 0), P(0, 0), seg)
    assert sees(P(3, 0), P(2, 0), seg)
    assert sees(P(1, 1), P(0, 0), seg)


def test_see_each_other_examples():
    assert see_each_other(P(0, 0), [P(0, 0)], P(5, 0), [P(5, 0)])
    X = [P(0, 0), P(2, 1), P(2, -1)]
    Y = [P(5, 0), P(7, 1), P(7, -1)]
    # (0, 0) is hidden behind X's own hull when looking from the right
    assert not see_each_other(P(0, 0), X, P(5, 0), Y)
    assert see_each_other(P(2, 1), X, P(5, 0), Y)
    for x in X:
        for y in Y:
            assert see_each_other(x, X, y, Y) == see_each_other(y, Y, x, X)
    with pytest.raises(ValueError):
        see_each_other(P(0, 0), X, P(1, 0), [P(1, 0), P(9, 9), P(9, 8)])


def test_angle_examples():
    o = P(0, 0)
    assert angle_at_most_pi(o, P(1, 0), P(0, -1))
    assert not angle_at_most_pi(o, P(1, 0), P(0, 1))
    # 135 degrees clockwise from +x is (-1, -1); (-1, 1) is 225 degrees clockwise
    assert angle_at_most_pi(o, P(1, 0), P(-1, -1))
    assert not angle_at_most_pi(o, P(1, 0), P(-1, 1))
    assert angle_at_most_pi(o, P(1, 0), P(-1, 0))
    assert not angle_less_than_pi(o, P(1, 0), P(-1, 0))
    with pytest.raises(ValueError):
        angle_at_most_pi(o, o, P(1, 1))


def test_general_position_check():
    check_general_position([P(0, 0), P(1, 0), P(0, 1)])
    with pytest.raises(GeneralPositionError):
        check_general_position([P(0, 0), P(1, 1), P(5, 2), P(2, 2)])
    with pytest.raises(GeneralPositionError):
        check_general_position([P(0, 0), P(0, 0), P(0, 1)])


# properties -------------------------------------------------------------

@given(points, points, points)
def test_orientation_antisymmetric(a, b, c):
    o = orientation(a, b, c)
    assert orientation(b, a, c) == -o
    assert orientation(a, c, b) == -o
    assert orientation(c, b, a) == -o
    assert orientation(b, c, a) == o


@given(points, points, points, points)
def test_crossing_symmetric(a, b, c, d):
    assume(a != b and c != d)
    try:
        r = crosses(a, b, c, d)
    except DegenerateOverlap:
        with pytest.raises(DegenerateOverlap):
            crosses(c, d, a, b)
        return
    assert r == crosses(c, d, a, b) == crosses(b, a, d, c)
    if r:
        assert segments_meet(a, b, c, d)


def _sees_brute(y, x, X):
    """Segment xy against every hull edge, independent of the cone test."""
    h = convex_hull(X)
    if x not in h.vertex_set:
        return False
    for p, q in h.edges():
        if x in (p, q):
            # the only contact allowed on an incident edge is x itself
            other = q if p == x else p
            if orientation(x, y, other) == 0 and segments_meet(x, y, other, other):
                return False
            continue
        if segments_meet(x, y, p, q):
            return False
    # a segment leaving x into the interior meets the hull in more than x
    if len(h) >= 3:
        mid = Point((x.x * 999 + y.x) / 1000, (x.y * 999 + y.y) / 1000)
        if h.locate(mid) >= 0:
            return False
    return True


@given(general_sets(3, 10), points)
def test_sees_matches_edge_oracle(X, y):
    h = convex_hull(X)
    assume(h.locate(y) < 0)
    for x in X:
        assert sees(y, x, X) == _sees_brute(y, x, X)


@given(general_sets(1, 10), st.randoms(use_true_random=False))
def test_hull_permutation_invariant(X, rnd):
    Y = list(X)
    rnd.shuffle(Y)
    h = convex_hull(X)
    assert convex_hull(Y) == h
    assert all(h.contains(q) for q in X)
    assert h.vertices[0] == min(X)


@given(points, points, points)
def test_angle_xor(p, x, y):
    assume(orientation(p, x, y) != 0)
    assert angle_at_most_pi(p, x, y) != angle_at_most_pi(p, y, x)


@given(general_sets(3, 6), general_sets(3, 6))
def test_hulls_meet_symmetric(A, B):
    assert hulls_meet(convex_hull(A), convex_hull(B)) == hulls_meet(convex_hull(B), convex_hull(A))
