"""Jump configurations: construction, validation, 4-forcings and repair.

A configuration holds one jump edge per blob, leading to the next blob of the
same color.  Blob ``i`` is followed (same color) by blob ``i + 2``.

Within the family the repair loop explores, red edges always end at the first
point of their destination blob and blue edges always start at the last point
of their source blob; only the other endpoint moves.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable

from .errors import ConfigurationError, DegenerateOverlap, InternalInvariantViolation, NonTermination
from .geometry import Color, Point, _cross_sign, crosses, hulls_meet, sees
from .radial import Blob, RadialOrder, gap_angles_ok


@dataclass(frozen=True)
class JumpEdge:
    from_blob: Blob
    to_blob: Blob
    src: Point
    dst: Point

    @property
    def color(self) -> Color:
        return self.from_blob.color

    def crosses(self, other: "JumpEdge") -> bool:
        return crosses(self.src, self.dst, other.src, other.dst)

    def side(self, q: Point) -> int:
        """Side of the line through this edge (+1 left, -1 right, 0 on it)."""
        return _cross_sign(self.src, self.dst, q)


@dataclass(frozen=True)
class JumpConfiguration:
    """``edges[i]`` is the edge leaving blob ``i``; empty for one blob per color."""

    order: RadialOrder
    edges: tuple[JumpEdge, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def outgoing(self, X: Blob) -> JumpEdge:
        return self.edges[X.index]

    def incoming(self, X: Blob) -> JumpEdge:
        return self.edges[(X.index - 2) % len(self.edges)]

    def over(self, X: Blob) -> JumpEdge:
        """The opposite-color edge from the blob before ``X`` to the blob after it."""
        return self.edges[(X.index - 1) % len(self.edges)]

    def a(self, X: Blob) -> Point:
        return self.incoming(X).dst

    def b(self, X: Blob) -> Point:
        return self.outgoing(X).src

    def with_edge(self, edge: JumpEdge) -> "JumpConfiguration":
        edges = list(self.edges)
        edges[edge.from_blob.index] = edge
        return replace(self, edges=tuple(edges))


@dataclass(frozen=True)
class FourForcing:
    center: JumpEdge
    pierced_blob: Blob
    incoming: JumpEdge
    outgoing: JumpEdge


@dataclass
class ConfigReport:
    violations: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def first(self) -> tuple[str, str] | None:
        return self.violations[0] if self.violations else None

    @property
    def kinds(self) -> set[str]:
        return {k for k, _ in self.violations}


def canonical_config(order: RadialOrder) -> JumpConfiguration:
    """Last point of every blob to the first point of the next same-color blob."""
    if len(order.blobs) <= 2:
        return JumpConfiguration(order, ())
    if not gap_angles_ok(order):
        raise ConfigurationError("some same-color gap spans at least pi around the pivot")
    edges = []
    for X in order.blobs:
        Y = order.next_same(X)
        edges.append(JumpEdge(X, Y, X.last, Y.first))
    return JumpConfiguration(order, tuple(edges))


def edge_problems(order: RadialOrder, e: JumpEdge) -> list[tuple[str, str]]:
    """Reasons why ``e`` is not a jump edge of ``order`` (empty when it is)."""
    out = []
    X, Y = e.from_blob, e.to_blob
    if order.next_same(X) != Y or e.src not in X.points or e.dst not in Y.points:
        return [("structure", f"edge from blob {X.index} is not anchored correctly")]
    if _cross_sign(order.pivot, e.src, e.dst) > 0:
        out.append(("angle", f"edge from blob {X.index} subtends more than pi"))
    if hulls_meet(X.hull, Y.hull):
        out.append(("visibility", f"blobs {X.index} and {Y.index} have overlapping hulls"))
    elif not (sees(e.dst, e.src, X.hull) and sees(e.src, e.dst, Y.hull)):
        out.append(("visibility", f"endpoints of edge from blob {X.index} do not see each other"))
    return out


def _meet_badly(e: JumpEdge, f: JumpEdge) -> bool:
    try:
        return e.crosses(f)
    except DegenerateOverlap:
        return True


def validate_config(config: JumpConfiguration) -> ConfigReport:
    """Check every structural property a jump configuration must have.

    Besides the definition (visibility, angle, one edge per blob, no
    same-color crossing, distinct endpoints inside non-singleton blobs) this
    checks the consequences used downstream: an edge from blob ``i`` may only
    be crossed by the two edges incident to blob ``i + 1`` (so at most two
    crossings), and only the edge passing over a blob may touch its hull.
    """
    order = config.order
    report = ConfigReport()
    m = len(order.blobs)
    if m <= 2:
        if config.edges:
            report.violations.append(("structure", "one blob per color admits no edges"))
        return report
    if len(config.edges) != m:
        report.violations.append(("structure", f"{len(config.edges)} edges for {m} blobs"))
        return report
    for i, e in enumerate(config.edges):
        if e.from_blob.index != i:
            report.violations.append(("structure", f"edge {i} leaves blob {e.from_blob.index}"))
            return report
    for e in config.edges:
        report.violations.extend(edge_problems(order, e))
    for X in order.blobs:
        if len(X) > 1 and config.a(X) == config.b(X):
            report.violations.append(("shared-endpoint", f"blob {X.index} uses {config.a(X)} twice"))
    edges = config.edges
    for i in range(m):
        for j in range(i + 1, m):
            if edges[i].color is edges[j].color and _meet_badly(edges[i], edges[j]):
                report.violations.append(("same-color-crossing", f"edges {i} and {j}"))
    for i, e in enumerate(edges):
        allowed = {(i - 1) % m, (i + 1) % m}
        hits = [j for j in range(m) if edges[j].color is not e.color and _meet_badly(e, edges[j])]
        if len(hits) > 2:
            report.violations.append(("crossing-bound", f"edge {i} crossed {len(hits)} times"))
        if any(j not in allowed for j in hits):
            report.violations.append(("crossing-window", f"edge {i} crossed by edges {hits}"))
    for X in order.blobs:
        over = config.over(X)
        for e in edges:
            if e.from_blob == X or e.to_blob == X or e is over:
                continue
            if X.hull.meets_segment(e.src, e.dst):
                report.violations.append(
                    ("hull-window", f"edge {e.from_blob.index} touches hull of blob {X.index}")
                )
    return report


def _forcing_at(config: JumpConfiguration, X1: Blob) -> FourForcing | None:
    center = config.over(X1)
    inc, out = config.incoming(X1), config.outgoing(X1)
    if not (center.crosses(inc) and center.crosses(out)):
        return None
    if not X1.hull.meets_segment(center.src, center.dst):
        return None
    sa, sb = center.side(inc.dst), center.side(out.src)
    if sa == 0 or sa != sb:
        return None
    return FourForcing(center, X1, inc, out)


def find_4_forcings(config: JumpConfiguration) -> list[FourForcing]:
    """Every 4-forcing of the configuration, one per pierced blob at most."""
    if len(config.edges) < 4:
        return []
    found = []
    for X1 in config.order.blobs:
        f = _forcing_at(config, X1)
        if f is not None:
            found.append(f)
    return found


def blue_red_crossings(config: JumpConfiguration) -> int:
    """Crossings between the edge leaving a blue blob and the one leaving the red blob after it."""
    if len(config.edges) < 4:
        return 0
    m = len(config.edges)
    return sum(
        1
        for X in config.order.blobs
        if X.color is Color.BLUE and config.edges[X.index].crosses(config.edges[(X.index + 1) % m])
    )


@dataclass(frozen=True)
class RepairStep:
    kind: str  # "shift" (step 1 only) or "swap" (both steps)
    blob: int
    crossings_before: int
    crossings_after: int


def _fits(config: JumpConfiguration, e: JumpEdge) -> bool:
    order = config.order
    if edge_problems(order, e):
        return False
    for other in config.edges:
        if other.from_blob != e.from_blob and other.color is e.color and e.crosses(other):
            return False
    return True


def _resolve(config: JumpConfiguration, f: FourForcing) -> tuple[JumpConfiguration, str]:
    X1, center = f.pierced_blob, f.center
    # step 1: push the center's free endpoint to the point of its blob nearest X1
    if center.color is Color.RED:
        moved = replace(center, src=center.from_blob.last)
    else:
        moved = replace(center, dst=center.to_blob.first)
    if moved != center:
        if not _fits(config, moved):
            raise ConfigurationError(f"shifted center over blob {X1.index} is not a jump edge")
        config = config.with_edge(moved)
        if _forcing_at(config, X1) is None:
            return config, "shift"
    center = config.over(X1)
    # step 2: re-anchor the incident edge whose free endpoint lies in X1 on the
    # far side of the center line, so it no longer crosses the center
    if center.color is Color.RED:
        target = config.incoming(X1)
        fixed = target.src
        candidates = list(X1.points)
    else:
        target = config.outgoing(X1)
        fixed = target.dst
        candidates = list(reversed(X1.points))
    side = center.side(fixed)
    for z in candidates:
        if center.side(z) != side or not sees(fixed, z, X1.hull):
            continue
        e = replace(target, dst=z) if center.color is Color.RED else replace(target, src=z)
        if e.crosses(center) or not _fits(config, e):
            continue
        return config.with_edge(e), "swap"
    raise ConfigurationError(f"no admissible re-anchoring inside blob {X1.index}")


def repair(
    config: JumpConfiguration,
    log: Callable[[RepairStep], None] | None = None,
) -> JumpConfiguration:
    """Remove all 4-forcings by local exchanges that never add blue-red crossings.

    Requires an order without monster-jumps whose same-color gaps are all
    below pi.  Each round takes the first 4-forcing, moves the free endpoint
    of its center edge to the extreme point of its blob and, if the 4-forcing
    survives, re-anchors the blue-red crossing partner of the center on the
    other side of the center line.
    """
    m = len(config.edges)
    cap = 4 * m * m
    rounds = 0
    while True:
        forcings = find_4_forcings(config)
        if not forcings:
            return config
        rounds += 1
        if rounds > cap:
            raise NonTermination(f"repair exceeded {cap} rounds")
        before = blue_red_crossings(config)
        config, kind = _resolve(config, forcings[0])
        after = blue_red_crossings(config)
        if after > before:
            raise InternalInvariantViolation("repair increased the blue-red crossing count")
        if log is not None:
            log(RepairStep(kind, forcings[0].pierced_blob.index, before, after))
