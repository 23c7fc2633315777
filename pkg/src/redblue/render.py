"""SVG 1.1 pictures of solutions and of the structures behind them."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from typing import Sequence

from .assemble import CyclePair
from .geometry import Color, Point, crosses, intersection_point
from .verify import cycle_edges

PALETTE = {Color.RED: "#d62728", Color.BLUE: "#1f77b4"}
SIZE = 640
MARGIN = 24


class _Frame:
    """Maps exact coordinates into the SVG viewport (y axis pointing up)."""

    def __init__(self, pts: Sequence[Point]):
        xs = [float(q.x) for q in pts]
        ys = [float(q.y) for q in pts]
        self.x0, self.y1 = min(xs), max(ys)
        span = max(max(xs) - self.x0, self.y1 - min(ys), 1e-9)
        self.scale = (SIZE - 2 * MARGIN) / span

    def __call__(self, q: Point) -> tuple[str, str]:
        x = MARGIN + (float(q.x) - self.x0) * self.scale
        y = MARGIN + (self.y1 - float(q.y)) * self.scale
        return f"{x:.3f}", f"{y:.3f}"


def _polyline(parent: ET.Element, frame: _Frame, pts: Sequence[Point], closed: bool, **attrs: str) -> None:
    coords = " ".join(",".join(frame(q)) for q in pts)
    ET.SubElement(parent, "polygon" if closed else "polyline", points=coords, fill="none", **attrs)


def _line(parent: ET.Element, frame: _Frame, a: Point, b: Point, **attrs: str) -> None:
    (x1, y1), (x2, y2) = frame(a), frame(b)
    ET.SubElement(parent, "line", x1=x1, y1=y1, x2=x2, y2=y2, **attrs)


def crossing_points(pair: CyclePair) -> list[Point]:
    out = []
    for e in cycle_edges(pair.red_cycle):
        for f in cycle_edges(pair.blue_cycle):
            if crosses(*e, *f):
                out.append(intersection_point(*e, *f))
    return out


def render_svg(pair: CyclePair, trace: bool = False) -> str:
    """Both cycles with crossing markers; with ``trace`` also the pivot, blob hulls and jump edges."""
    pts = list(pair.red_cycle) + list(pair.blue_cycle)
    info = pair.trace if trace else None
    pivot = pair.provenance.get("pivot") if trace else None
    frame = _Frame(pts + ([pivot] if pivot is not None else []))
    svg = ET.Element("svg", xmlns="http://www.w3.org/2000/svg", version="1.1",
                     width=str(SIZE), height=str(SIZE), viewBox=f"0 0 {SIZE} {SIZE}")
    ET.SubElement(svg, "rect", width=str(SIZE), height=str(SIZE), fill="white")

    if info is not None:
        flip = info.colors_swapped
        layer = ET.SubElement(svg, "g", id="trace")
        for q in info.order.order:
            _line(layer, frame, info.order.pivot, q, stroke="#bbbbbb", **{"stroke-width": "0.5"})
        for X in info.order.blobs:
            color = X.color.other if flip else X.color
            if len(X.points) > 1:
                _polyline(layer, frame, X.hull.vertices, True, stroke=PALETTE[color],
                          **{"stroke-dasharray": "1,3", "stroke-width": "1"})
        for e in info.config.edges:
            color = e.color.other if flip else e.color
            _line(layer, frame, e.src, e.dst, stroke=PALETTE[color],
                  **{"stroke-dasharray": "6,4", "stroke-width": "1.2", "opacity": "0.8"})

    cycles = ET.SubElement(svg, "g", id="cycles")
    for color, cyc in ((Color.RED, pair.red_cycle), (Color.BLUE, pair.blue_cycle)):
        _polyline(cycles, frame, cyc, True, stroke=PALETTE[color], **{"stroke-width": "1.8"})

    marks = ET.SubElement(svg, "g", id="crossings")
    for c in crossing_points(pair):
        x, y = frame(c)
        ET.SubElement(marks, "circle", cx=x, cy=y, r="4", fill="none", stroke="black")

    dots = ET.SubElement(svg, "g", id="points")
    for q in pts:
        x, y = frame(q)
        ET.SubElement(dots, "circle", cx=x, cy=y, r="3", fill=PALETTE[q.color])

    if pivot is not None:
        x, y = frame(pivot)
        ET.SubElement(svg, "circle", id="pivot", cx=x, cy=y, r="4", fill="black")

    ET.indent(svg)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(svg, encoding="unicode") + "\n"
