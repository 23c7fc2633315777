"""Instance files and JSON reports with exact rational coordinates.

Coordinates are written as ``"num/den"`` strings (plain ``"n"`` for integers)
so that reloading an instance reproduces it bit for bit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .assemble import CyclePair
from .errors import InputError
from .geometry import Color, Point, check_general_position
from .verify import CrossingReport, cycle_edges

FORMAT_VERSION = 1


def coord_str(v: Fraction) -> str:
    return str(Fraction(v))


def parse_coord(raw: Any) -> Fraction:
    if isinstance(raw, bool):
        raise InputError(f"bad coordinate {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"bad coordinate {raw!r}") from None
    # floats would silently round; insist on strings
    raise InputError(f"coordinate {raw!r} must be an integer or a rational string")


def _parse_color(raw: Any) -> Color:
    try:
        return Color(str(raw).lower())
    except ValueError:
        raise InputError(f"bad color {raw!r}; expected 'red' or 'blue'") from None


def point_to_json(q: Point) -> dict[str, str]:
    out = {"x": coord_str(q.x), "y": coord_str(q.y)}
    if q.color is not None:
        out["color"] = q.color.value
    return out


def point_from_json(obj: Any, colored: bool = True) -> Point:
    if not isinstance(obj, dict) or "x" not in obj or "y" not in obj:
        raise InputError(f"malformed point {obj!r}")
    color = _parse_color(obj.get("color")) if colored else None
    return Point(parse_coord(obj["x"]), parse_coord(obj["y"]), color)


@dataclass
class InstanceFile:
    points: list[Point]
    seed: int | None = None
    metadata: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> str:
        doc: dict[str, Any] = {
            "format": FORMAT_VERSION,
            "points": [point_to_json(q) for q in self.points],
        }
        if self.seed is not None:
            doc["seed"] = self.seed
        if self.metadata:
            doc["metadata"] = self.metadata
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "InstanceFile":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"instance file is not valid JSON: {exc}") from None
        if not isinstance(doc, dict) or not isinstance(doc.get("points"), list):
            raise InputError("instance file needs a 'points' list")
        pts = [point_from_json(o) for o in doc["points"]]
        if len(set(pts)) != len(pts):
            raise InputError("instance contains duplicate points")
        check_general_position(pts)
        seed = doc.get("seed")
        if seed is not None and not isinstance(seed, int):
            raise InputError("seed must be an integer")
        meta = doc.get("metadata") or {}
        if not isinstance(meta, dict):
            raise InputError("metadata must be an object")
        return cls(pts, seed, meta)


def read_instance(path: str) -> InstanceFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return InstanceFile.from_json(text)


# reports ----------------------------------------------------------------

_FRACTION_KEYS = {"epsilon", "delta"}


def _prov_to_json(prov: dict[str, Any]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for k, v in prov.items():
        if isinstance(v, Point):
            v = point_to_json(v)
        elif isinstance(v, Fraction):
            v = coord_str(v)
        out[k] = v
    return out


def _prov_from_json(obj: dict[str, Any]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for k, v in obj.items():
        if k == "pivot" and v is not None:
            v = point_from_json(v, colored=False)
        elif k in _FRACTION_KEYS and v is not None:
            v = parse_coord(v)
        out[k] = v
    return out


def report_dict(pair: CyclePair) -> dict[str, Any]:
    rep = pair.crossings
    edges = []
    for color, cyc in ((Color.RED, pair.red_cycle), (Color.BLUE, pair.blue_cycle)):
        for a, b in cycle_edges(cyc):
            edges.append({
                "color": color.value,
                "a": point_to_json(a),
                "b": point_to_json(b),
                "count": rep.per_edge_counts[(color, a, b)],
            })
    return {
        "format": FORMAT_VERSION,
        "ok": rep.ok,
        "max_count": rep.max_count,
        "histogram": {str(k): v for k, v in rep.histogram().items()},
        "spanning_ok": {c.value: ok for c, ok in rep.spanning_ok.items()},
        "self_intersections": [
            [c.value, [point_to_json(q) for q in e], [point_to_json(q) for q in f]]
            for c, e, f in rep.self_intersections
        ],
        "red_cycle": [point_to_json(q) for q in pair.red_cycle],
        "blue_cycle": [point_to_json(q) for q in pair.blue_cycle],
        "per_edge_counts": edges,
        "pivot": _prov_to_json({"pivot": pair.provenance.get("pivot")})["pivot"],
        "provenance": _prov_to_json(pair.provenance),
    }


def report_to_json(pair: CyclePair) -> str:
    return json.dumps(report_dict(pair), indent=2, sort_keys=True) + "\n"


def report_from_json(text: str) -> CyclePair:
    """Inverse of :func:`report_to_json`."""
    doc = json.loads(text)
    red = tuple(point_from_json(o) for o in doc["red_cycle"])
    blue = tuple(point_from_json(o) for o in doc["blue_cycle"])
    counts = {}
    for e in doc["per_edge_counts"]:
        counts[(Color(e["color"]), point_from_json(e["a"]), point_from_json(e["b"]))] = e["count"]
    selfx = [
        (Color(c), tuple(point_from_json(q) for q in e), tuple(point_from_json(q) for q in f))
        for c, e, f in doc["self_intersections"]
    ]
    spanning = {Color(k): v for k, v in doc["spanning_ok"].items()}
    rep = CrossingReport(counts, doc["max_count"], selfx, spanning)
    return CyclePair(red, blue, rep, _prov_from_json(doc["provenance"]))

