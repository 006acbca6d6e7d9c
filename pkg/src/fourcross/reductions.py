"""The lower-bound chain: 2COUG -> 2CNS -> 4CC, with direct solvers.

2COUG asks whether two lists of numbers contain ``x`` and ``y`` with
``0 < |x - y| < 1``. 2CNS asks whether a red and a blue point span a line of
negative slope. Both reductions are linear and exact.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Tuple

from .core import ColoredPoint, Coordinate, InvalidInputError, PointSet, coord

RED, BLUE, GREEN, BLACK = 0, 1, 2, 3


@dataclass(frozen=True)
class CougInstance:
    xs: Tuple[Coordinate, ...]
    ys: Tuple[Coordinate, ...]

    def __post_init__(self):
        object.__setattr__(self, "xs", tuple(coord(v) for v in self.xs))
        object.__setattr__(self, "ys", tuple(coord(v) for v in self.ys))
        if len(self.xs) != len(self.ys):
            raise InvalidInputError(f"xs and ys differ in length ({len(self.xs)} != {len(self.ys)})")

    @property
    def n(self) -> int:
        return len(self.xs)


@dataclass(frozen=True)
class CnsInstance:
    points: Tuple[ColoredPoint, ...]

    def __post_init__(self):
        pts = tuple(self.points)
        for p in pts:
            if p.color not in (RED, BLUE):
                raise InvalidInputError(f"2CNS points must be red (0) or blue (1), got color {p.color}")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)


def solve_2coug(inst: CougInstance) -> bool:
    """O(n log n): compare each x with its nearest strictly smaller and larger y."""
    ys = sorted(inst.ys)
    for x in inst.xs:
        i = bisect_left(ys, x)
        if i > 0 and x - ys[i - 1] < 1:
            return True
        j = bisect_right(ys, x)
        if j < len(ys) and ys[j] - x < 1:
            return True
    return False


def solve_2cns(inst) -> bool:
    """O(n log n): sweep by x, keeping the highest red and blue y seen so far.

    A pair has negative slope iff the left point is strictly higher and
    strictly left; only strictly smaller x enters the prefix.
    """
    pts = sorted(inst.points if isinstance(inst, CnsInstance) else inst, key=lambda p: p.x)
    best = {RED: None, BLUE: None}
    i = 0
    while i < len(pts):
        j = i
        while j < len(pts) and pts[j].x == pts[i].x:
            j += 1
        group = pts[i:j]
        for p in group:
            top = best[BLUE if p.color == RED else RED]
            if top is not None and top > p.y:
                return True
        for p in group:
            if best[p.color] is None or p.y > best[p.color]:
                best[p.color] = p.y
        i = j
    return False


def reduce_coug_to_cns(inst: CougInstance) -> CnsInstance:
    """Values on y = x, plus a copy of each shifted one unit left (same color)."""
    diag = [ColoredPoint(x, x, RED) for x in inst.xs] + [ColoredPoint(y, y, BLUE) for y in inst.ys]
    shifted = [ColoredPoint(p.x - 1, p.y, p.color) for p in diag]
    return CnsInstance(tuple(diag + shifted))


def reduce_cns_to_4cc(inst) -> PointSet:
    """Add a green point beyond the top-right corner and a black one beyond
    the bottom-left corner of the bounding box."""
    pts = tuple(inst.points if isinstance(inst, CnsInstance) else inst)
    if not pts:
        raise InvalidInputError("cannot reduce an empty 2CNS instance")
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    green = ColoredPoint(max(xs) + 1, max(ys) + 1, GREEN)
    black = ColoredPoint(min(xs) - 1, min(ys) - 1, BLACK)
    return PointSet(pts + (green, black))
