"""Deciding whether a colored point set contains a 4-colored cross."""

from .core import (
    ColoredPoint,
    Coordinate,
    Cross,
    InvalidInputError,
    PointSet,
    Quadrant,
    coord,
    point,
    positive_area_rh4,
    quadrant_of,
    verify_cross,
)
from .decider import decide, has_cross
from .oracle import oracle_centers, oracle_subsets

__all__ = [
    "ColoredPoint",
    "Coordinate",
    "Cross",
    "InvalidInputError",
    "PointSet",
    "Quadrant",
    "coord",
    "decide",
    "has_cross",
    "oracle_centers",
    "oracle_subsets",
    "point",
    "positive_area_rh4",
    "quadrant_of",
    "verify_cross",
]
