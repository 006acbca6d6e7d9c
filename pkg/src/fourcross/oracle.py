"""Brute-force reference deciders and checkers.

Deliberately slow and simple; nothing here shares code with the sweep in
:mod:`fourcross.decider`.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

from .core import ColoredPoint, Cross, as_point_set, midpoint, positive_area_rh4


def _midpoints(values) -> list:
    u = sorted(set(values))
    return [midpoint(a, b) for a, b in zip(u, u[1:])]


def _distinct_representatives(quads: Sequence[Dict[int, ColoredPoint]]) -> Optional[Tuple[ColoredPoint, ...]]:
    # four colors per quadrant always suffice to find distinct representatives
    choices = [sorted(q)[:4] for q in quads]
    for combo in product(*choices):
        if len(set(combo)) == 4:
            return tuple(q[c] for q, c in zip(quads, combo))
    return None


def oracle_centers(points) -> Optional[Cross]:
    """Try every center on the grid of coordinate midpoints.

    Any cross center can be slid to such a grid point without any point
    changing quadrant. O(n^3).
    """
    pts = as_point_set(points)
    for cx in _midpoints(p.x for p in pts):
        left = [p for p in pts if p.x < cx]
        right = [p for p in pts if p.x > cx]
        if not left or not right:
            continue
        for cy in _midpoints(p.y for p in pts):
            quads: List[Dict[int, ColoredPoint]] = [{}, {}, {}, {}]
            for p in right:
                quads[0 if p.y > cy else 3].setdefault(p.color, p)
            for p in left:
                quads[1 if p.y > cy else 2].setdefault(p.color, p)
            if not all(quads):
                continue
            found = _distinct_representatives(quads)
            if found is not None:
                return Cross((cx, cy), found)
    return None


def oracle_subsets(points) -> Optional[Cross]:
    """Try every 4-subset with pairwise distinct colors. O(n^4)."""
    pts = as_point_set(points)
    by_color: Dict[int, List[ColoredPoint]] = {}
    for p in pts:
        by_color.setdefault(p.color, []).append(p)
    for colors in combinations(sorted(by_color), 4):
        for quad in product(*(by_color[c] for c in colors)):
            found = positive_area_rh4(quad)
            if found is not None:
                return found
    return None


def midline_cross(pts: Sequence[ColoredPoint]) -> Optional[Tuple]:
    """Center (if any) on the midline grid of ``pts`` with every open quadrant
    occupied. Colors are ignored. Used to check the 4-point hull test."""
    for cx in _midpoints(p[0] for p in pts):
        for cy in _midpoints(p[1] for p in pts):
            seen = set()
            for p in pts:
                seen.add((p[0] > cx, p[1] > cy))
            if len(seen) == 4:
                return (cx, cy)
    return None


def _side(points, line, side: str):
    total = line.y_above + line.y_below
    if side == "above":
        return [p for p in points if 2 * p.y > total]
    if side == "below":
        return [p for p in points if 2 * p.y < total]
    raise ValueError(f"side must be 'above' or 'below', got {side!r}")


def color_extremes(points, line, side: str, direction: str) -> Dict[int, object]:
    """Per-color extreme x (max for 'east', min for 'west') on one side of a line."""
    if direction not in ("east", "west"):
        raise ValueError(f"direction must be 'east' or 'west', got {direction!r}")
    best = max if direction == "east" else min
    out: Dict[int, object] = {}
    for p in _side(as_point_set(points), line, side):
        out[p.color] = best(out[p.color], p.x) if p.color in out else p.x
    return out


def candidate_set_oracle(points, line, side: str, direction: str) -> List[Tuple[int, object]]:
    """Top (at most) four ``(color, extreme_x)`` pairs, best first.

    Ties on the fourth place are broken by color id; any tie-breaking is an
    equally valid candidate set, see :func:`matches_characterization`.
    """
    ext = color_extremes(points, line, side, direction)
    sign = -1 if direction == "east" else 1
    ranked = sorted(ext.items(), key=lambda cv: (sign * cv[1], cv[0]))
    return ranked[:4]


def matches_characterization(entries, points, line, side: str, direction: str) -> bool:
    """Check a swept candidate set against the from-scratch definition.

    Entries must come from the right side, have distinct colors, each attain
    its color's extreme, number min(4, colors present), and dominate every
    color left out.
    """
    ext = color_extremes(points, line, side, direction)
    pool = set(_side(as_point_set(points), line, side))
    colors = [p.color for p in entries]
    if len(set(colors)) != len(colors) or len(colors) != min(4, len(ext)):
        return False
    for p in entries:
        if p not in pool or ext[p.color] != p.x:
            return False
    rest = [v for c, v in ext.items() if c not in set(colors)]
    if not rest:
        return True
    kept = [ext[c] for c in colors]
    if direction == "east":
        return max(rest) <= min(kept)
    return min(rest) >= max(kept)


def brute_2coug(xs, ys) -> bool:
    return any(0 < abs(x - y) < 1 for x in xs for y in ys)


def brute_2cns(points) -> bool:
    red = [p for p in points if p.color == 0]
    blue = [p for p in points if p.color == 1]
    return any((p.x - q.x) * (p.y - q.y) < 0 for p in red for q in blue)
