"""Turning a jump configuration into the two spanning cycles, and the full solver."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .errors import ConfigurationError, InputError, InternalInvariantViolation, NonTermination
from .geometry import Color, Point, check_general_position, convex_hull, hulls_meet
from .jump import JumpConfiguration, RepairStep, canonical_config, repair
from .paths import Line, close_single_blob, spanning_path
from .pivot import HullRelation, PivotCandidate, classify_hulls, pivot_candidates, split_colors
from .radial import RadialOrder
from .verify import CrossingReport, check_cycles

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CyclePair:
    red_cycle: tuple[Point, ...]
    blue_cycle: tuple[Point, ...]
    crossings: CrossingReport
    provenance: dict[str, Any] = field(default_factory=dict)
    trace: "SolveTrace | None" = field(default=None, compare=False, repr=False)

    @property
    def max_count(self) -> int:
        return self.crossings.max_count


@dataclass(frozen=True)
class SolveTrace:
    """Intermediate structures behind a solution, kept for rendering.

    ``order`` and ``config`` use the internal color labels, which are the
    caller's labels flipped when ``colors_swapped`` is set.
    """

    order: RadialOrder
    config: JumpConfiguration
    repair_steps: tuple[RepairStep, ...]
    colors_swapped: bool


def blob_paths(config: JumpConfiguration) -> dict[int, tuple[Point, ...]]:
    """Path through each blob from its incoming to its outgoing jump endpoint."""
    paths = {}
    for X in config.order.blobs:
        over = config.over(X)
        ell = Line(over.src, over.dst)
        paths[X.index] = spanning_path(X.points, config.a(X), config.b(X), ell).vertices
    return paths


def assemble(order: RadialOrder, config: JumpConfiguration) -> CyclePair:
    """Close every color into one cycle: blob paths chained by jump edges."""
    if config.order is not order:
        raise ValueError("configuration belongs to a different radial order")
    if len(order.blobs) < 4:
        raise ConfigurationError("assembly needs at least two blobs of each color")
    paths = blob_paths(config)
    cycles: dict[Color, list[Point]] = {Color.RED: [], Color.BLUE: []}
    for X in order.blobs:
        cycles[X.color].extend(paths[X.index])
    report = check_cycles(order.order, cycles[Color.RED], cycles[Color.BLUE])
    if not report.ok:
        raise InternalInvariantViolation(
            f"assembled cycles fail verification (max crossing {report.max_count})"
        )
    return CyclePair(tuple(cycles[Color.RED]), tuple(cycles[Color.BLUE]), report)


def assemble_disjoint(S: Sequence[Point]) -> CyclePair:
    reds, blues = split_colors(S)
    if len(reds) < 3 or len(blues) < 3:
        raise InputError("need at least three points of each color")
    if hulls_meet(convex_hull(reds), convex_hull(blues)):
        raise InputError("the color classes do not have disjoint hulls")
    red, blue = close_single_blob(reds), close_single_blob(blues)
    return CyclePair(red, blue, check_cycles(S, red, blue))


def canonical_points(S: Iterable[Point]) -> list[Point]:
    """Validated, lexicographically sorted copy of the input."""
    pts = sorted(S)
    for q in pts:
        if q.color is None:
            raise InputError(f"{q} has no color")
    reds, blues = split_colors(pts)
    if len(reds) < 3 or len(blues) < 3:
        raise InputError("need at least three points of each color")
    check_general_position(pts)
    return pts


def _from_candidate(cand: PivotCandidate) -> tuple[CyclePair, SolveTrace]:
    steps: list[RepairStep] = []
    config = canonical_config(cand.order)
    config = repair(config, steps.append)
    pair = assemble(cand.order, config)
    return pair, SolveTrace(cand.order, config, tuple(steps), cand.colors_swapped)


def solve(S: Iterable[Point]) -> CyclePair:
    """Red and blue spanning cycles, each edge crossed at most three times."""
    pts = canonical_points(S)
    relation = classify_hulls(pts)
    if relation is HullRelation.DISJOINT:
        pair = assemble_disjoint(pts)
        prov: dict[str, Any] = {"relation": relation.value, "pivot": None}
        return CyclePair(pair.red_cycle, pair.blue_cycle, pair.crossings, prov)

    attempts = 0
    failures: list[str] = []
    for cand in pivot_candidates(pts, relation):
        attempts += 1
        try:
            pair, trace = _from_candidate(cand)
        except (ConfigurationError, NonTermination, InternalInvariantViolation) as exc:
            log.warning("pivot %s rejected downstream: %s", cand.p, exc)
            failures.append(str(exc))
            continue
        red, blue = pair.red_cycle, pair.blue_cycle
        if cand.colors_swapped:
            red, blue = blue, red
        lookup = {q: q for q in pts}
        red = tuple(lookup[q] for q in red)
        blue = tuple(lookup[q] for q in blue)
        report = check_cycles(pts, red, blue)
        if not report.ok:
            raise InternalInvariantViolation("un-swapped cycles fail verification")
        prov = {
            "relation": relation.value,
            "pivot": cand.p,
            "pivot_source": cand.provenance.value,
            "epsilon": cand.epsilon,
            "delta": cand.delta,
            "halvings": cand.halvings,
            "colors_swapped": cand.colors_swapped,
            "blobs": len(cand.order.blobs),
            "repair_steps": len(trace.repair_steps),
            "attempts": attempts,
        }
        return CyclePair(red, blue, report, prov, trace)
    raise InternalInvariantViolation(
        f"no pivot led to valid cycles ({attempts} tried): {'; '.join(failures) or 'none admissible'}"
    )
