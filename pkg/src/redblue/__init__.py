"""Red and blue non-crossing spanning cycles with every edge crossed at most three times."""

from .assemble import CyclePair, assemble, assemble_disjoint, solve
from .errors import (
    CollinearWithPivot,
    ConfigurationError,
    DegenerateOverlap,
    GeneralPositionError,
    InputError,
    InternalInvariantViolation,
    NonTermination,
    PivotSearchExhausted,
    RedBlueError,
    SizeLimit,
)
from .geometry import Color, Point, convex_hull, orientation, point, segments_cross, sees
from .pivot import HullRelation, choose_pivot, classify_hulls
from .radial import RadialOrder, radial_order
from .verify import CrossingReport, check, oracle_best_k

__version__ = "0.1.0"

__all__ = [
    "Color", "Point", "point", "orientation", "segments_cross", "convex_hull", "sees",
    "RadialOrder", "radial_order", "HullRelation", "classify_hulls", "choose_pivot",
    "CyclePair", "solve", "assemble", "assemble_disjoint",
    "CrossingReport", "check", "oracle_best_k",
    "RedBlueError", "InputError", "GeneralPositionError", "DegenerateOverlap", "CollinearWithPivot",
    "ConfigurationError", "NonTermination", "PivotSearchExhausted", "SizeLimit",
    "InternalInvariantViolation",
]
