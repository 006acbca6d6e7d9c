"""Exact coordinates, colored points, open quadrants and the 4-point hull test.

Coordinates are exact rationals. Integral values are stored as plain ``int``
and everything else as :class:`fractions.Fraction`; both expose
``numerator``/``denominator`` and compare exactly with each other, so no
predicate in this package ever rounds.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple, Union

Coordinate = Union[int, Fraction]


class InvalidInputError(ValueError):
    pass


def coord(value) -> Coordinate:
    """Convert ``value`` to an exact coordinate.

    Accepts ints, rationals, floats (their exact binary value) and strings in
    integer, decimal or ``p/q`` form, e.g. ``"0.5"`` -> ``Fraction(1, 2)``.
    Integral results come back as ``int``.
    """
    if isinstance(value, bool):
        raise InvalidInputError(f"not a coordinate: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            value = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"malformed number: {value!r}") from exc
    elif isinstance(value, (Rational, float)):
        try:
            value = Fraction(value)
        except (ValueError, OverflowError) as exc:
            raise InvalidInputError(f"non-finite number: {value!r}") from exc
    else:
        raise InvalidInputError(f"not a coordinate: {value!r}")
    if value.denominator == 1:
        return value.numerator
    return value


def midpoint(a: Coordinate, b: Coordinate) -> Coordinate:
    s = a + b
    if isinstance(s, int):
        return s // 2 if s % 2 == 0 else Fraction(s, 2)
    return coord(s / 2)


def format_coord(c: Coordinate) -> str:
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


class ColoredPoint(NamedTuple):
    x: Coordinate
    y: Coordinate
    color: int


def point(x, y, color: int) -> ColoredPoint:
    if isinstance(color, bool) or not isinstance(color, int) or color < 0:
        raise InvalidInputError(f"color must be a non-negative integer, got {color!r}")
    return ColoredPoint(coord(x), coord(y), color)


class PointSet(Sequence[ColoredPoint]):
    """An ordered, immutable collection of colored points (input order kept)."""

    __slots__ = ("points",)

    def __init__(self, points: Iterable[ColoredPoint] = ()):
        self.points: Tuple[ColoredPoint, ...] = tuple(points)

    @classmethod
    def from_tuples(cls, rows: Iterable[tuple]) -> "PointSet":
        return cls(point(x, y, c) for x, y, c in rows)

    def __getitem__(self, i):
        return self.points[i]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other) -> bool:
        if isinstance(other, PointSet):
            return self.points == other.points
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"PointSet({list(self.points)!r})"

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def colors(self) -> frozenset:
        return frozenset(p.color for p in self.points)

    @property
    def k(self) -> int:
        return len(self.colors)


def as_point_set(points) -> PointSet:
    if isinstance(points, PointSet):
        return points
    return PointSet(p if isinstance(p, ColoredPoint) else ColoredPoint(*p) for p in points)


class Quadrant(enum.IntEnum):
    Q1 = 1  # open north-east
    Q2 = 2  # open north-west
    Q3 = 3  # open south-west
    Q4 = 4  # open south-east


def quadrant_of(center, p) -> Optional[Quadrant]:
    """Open quadrant of ``center`` containing ``p``; ``None`` on either axis."""
    cx, cy = center[0], center[1]
    if p[0] == cx or p[1] == cy:
        return None
    if p[1] > cy:
        return Quadrant.Q1 if p[0] > cx else Quadrant.Q2
    return Quadrant.Q4 if p[0] > cx else Quadrant.Q3


@dataclass(frozen=True)
class Cross:
    """A center plus one witness per open quadrant, ordered Q1, Q2, Q3, Q4."""

    center: Tuple[Coordinate, Coordinate]
    witnesses: Tuple[ColoredPoint, ColoredPoint, ColoredPoint, ColoredPoint]

    def witness(self, q: Quadrant) -> ColoredPoint:
        return self.witnesses[int(q) - 1]

    def to_json(self) -> dict:
        return {
            "center": {"x": format_coord(self.center[0]), "y": format_coord(self.center[1])},
            "witnesses": [
                {"quadrant": q.name, "x": format_coord(p.x), "y": format_coord(p.y), "color": p.color}
                for q, p in zip(Quadrant, self.witnesses)
            ],
        }


def verify_cross(cross: Cross, points=None, *, check_colors: bool = True) -> bool:
    """Re-check a cross from scratch.

    Every witness must sit strictly inside its tagged open quadrant, colors
    must be pairwise distinct (unless ``check_colors`` is off) and, when
    ``points`` is given, every witness must be one of them.
    """
    if len(cross.witnesses) != 4:
        return False
    for q, p in zip(Quadrant, cross.witnesses):
        if quadrant_of(cross.center, p) is not q:
            return False
    if check_colors and len({p.color for p in cross.witnesses}) != 4:
        return False
    if points is not None:
        pool = set(points)
        if not all(p in pool for p in cross.witnesses):
            return False
    return True


def positive_area_rh4(pts: Sequence[ColoredPoint]) -> Optional[Cross]:
    """Separate four points one per open quadrant of some center, if possible.

    Such a center exists exactly when the rectilinear convex hull of the four
    points has positive area. Colors are ignored. The returned center is the
    middle of the open rectangle of feasible centers.
    """
    if len(pts) != 4:
        raise InvalidInputError(f"expected exactly 4 points, got {len(pts)}")
    by_x = sorted(range(4), key=lambda i: pts[i][0])
    by_y = sorted(range(4), key=lambda i: pts[i][1])
    x_lo, x_hi = pts[by_x[1]][0], pts[by_x[2]][0]
    y_lo, y_hi = pts[by_y[1]][1], pts[by_y[2]][1]
    if not (x_lo < x_hi and y_lo < y_hi):
        return None
    # the split is forced: the two leftmost must hold one top and one bottom point
    left, bottom = set(by_x[:2]), set(by_y[:2])
    sw = left & bottom
    if len(sw) != 1:
        return None
    (c,) = sw
    (b,) = left - sw
    (d,) = bottom - sw
    (a,) = set(range(4)) - left - bottom
    center = (midpoint(x_lo, x_hi), midpoint(y_lo, y_hi))
    return Cross(center, (pts[a], pts[b], pts[c], pts[d]))
