"""O(n log n) decision procedure for the 4-colored cross problem.

Points are grouped by distinct y. Between every two consecutive y-values sits
an intermediate line; for each line we keep four candidate sets (east/west
extremes above, west/east extremes below), each holding at most four points
of distinct colors. A top-down sweep builds the upper sets, a bottom-up sweep
the lower ones, and every line is then checked with a constant-size search.
"""

from __future__ import annotations

import enum
import gc
from bisect import bisect_right
from operator import attrgetter
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .core import ColoredPoint, Coordinate, Cross, as_point_set, midpoint

_by_y = attrgetter("y")


class IntermediateLine(NamedTuple):
    y_above: Coordinate
    y_below: Coordinate
    index: int

    @property
    def value(self) -> Coordinate:
        return midpoint(self.y_above, self.y_below)

    def is_above(self, p) -> bool:
        return 2 * p[1] > self.y_above + self.y_below

    def is_below(self, p) -> bool:
        return 2 * p[1] < self.y_above + self.y_below


def distinct_ys(points) -> List[Coordinate]:
    """Distinct y-values, strictly descending."""
    return sorted({p[1] for p in points}, reverse=True)


def intermediate_lines(ys: Sequence[Coordinate]) -> List[IntermediateLine]:
    return [IntermediateLine(ys[i], ys[i + 1], i) for i in range(len(ys) - 1)]


class Direction(enum.Enum):
    EAST = "east"  # keep maximal x
    WEST = "west"  # keep minimal x


class CandidateSet:
    """Up to four points of distinct colors, extreme in one horizontal direction.

    ``offer`` applies the point-testing rule: a same-colored entry is replaced
    only by a strictly better point; a new color is appended while there is
    room, and otherwise evicts the worst entry if strictly better than it.
    Ties keep the incumbent.
    """

    __slots__ = ("direction", "entries", "version", "_east", "_worst")

    def __init__(self, direction: Direction, entries: Iterable[ColoredPoint] = ()):
        self.direction = direction
        self._east = direction is Direction.EAST
        self.entries: List[ColoredPoint] = []
        self.version = 0
        self._worst = None
        for p in entries:
            self.offer(p)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self) -> str:
        return f"CandidateSet({self.direction.name}, {self.entries!r})"

    def colors(self) -> set:
        return {p.color for p in self.entries}

    def snapshot(self) -> Tuple[ColoredPoint, ...]:
        return tuple(self.entries)

    def _refresh_worst(self) -> None:
        xs = [q.x for q in self.entries]
        self._worst = min(xs) if self._east else max(xs)

    def offer(self, p: ColoredPoint) -> bool:
        """Test ``p`` against the set; returns True if the set changed."""
        entries = self.entries
        x = p.x
        east = self._east
        full = len(entries) == 4
        # a full set cannot gain from a point no better than its worst entry
        if full and (x <= self._worst if east else x >= self._worst):
            return False
        color = p.color
        for i, q in enumerate(entries):
            if q.color == color:
                if (x <= q.x) if east else (x >= q.x):
                    return False
                entries[i] = p
                break
        else:
            if full:
                entries[[q.x for q in entries].index(self._worst)] = p
            else:
                entries.append(p)
                full = len(entries) == 4
        self.version += 1
        if full:
            xs = [q.x for q in entries]
            self._worst = min(xs) if east else max(xs)
        return True


def test_point(p: ColoredPoint, west: CandidateSet, east: CandidateSet):
    west.offer(p)
    east.offer(p)
    return west, east


test_point.__test__ = False  # not a pytest test


class LineCandidates(NamedTuple):
    ne: Tuple[ColoredPoint, ...]
    nw: Tuple[ColoredPoint, ...]
    sw: Tuple[ColoredPoint, ...]
    se: Tuple[ColoredPoint, ...]


def _dense_ranks(values: list) -> Tuple[np.ndarray, int]:
    """Order-preserving dense integer ranks of exact values, and their count."""
    if all(type(v) is int for v in values):
        try:
            arr = np.array(values, dtype=np.int64)
        except OverflowError:
            arr = None
        if arr is not None:
            uniq, inv = np.unique(arr, return_inverse=True)
            return inv.astype(np.int64).reshape(-1), len(uniq)
    uniq = sorted(set(values))
    rank = {v: i for i, v in enumerate(uniq)}
    return np.fromiter((rank[v] for v in values), dtype=np.int64, count=len(values)), len(uniq)


class _Layout:
    """Rank-transformed view of a point set shared by both sweeps."""

    def __init__(self, pts):
        self.pts = pts
        self.xr, self.mx = _dense_ranks([p.x for p in pts])
        self.yr, self.m = _dense_ranks([p.y for p in pts])
        self.cid, self.k = _dense_ranks([p.color for p in pts])


def _records(values: np.ndarray, cid: np.ndarray, bound: int) -> np.ndarray:
    """Mask of strict per-color running-maximum records along the given order.

    Only such points can change a candidate set: a point that does not beat
    the best earlier point of its color is either dominated by its color's
    entry or, if that color was evicted, by the set's current worst entry.
    """
    if len(values) == 0:
        return np.zeros(0, dtype=bool)
    by_color = np.argsort(cid, kind="stable")
    # colors occupy disjoint key bands, so one global accumulate is per-color
    key = cid[by_color] * bound + values[by_color]
    best = np.maximum.accumulate(key)
    rec_sorted = np.empty(len(key), dtype=bool)
    rec_sorted[0] = True
    rec_sorted[1:] = key[1:] > best[:-1]
    rec = np.empty_like(rec_sorted)
    rec[by_color] = rec_sorted
    return rec


def _sweep(layout: _Layout, downward: bool):
    """Sweep the y-groups in one direction; return change events.

    Each event is ``(g, west, east)``: the snapshots after absorbing the
    ``g``-th group in sweep order. The final group is never absorbed, as no
    line lies beyond it. Groups without an event inherit the previous state.
    """
    yr, m = layout.yr, layout.m
    if downward:
        order = np.argsort(-yr, kind="stable")
        group = (m - 1) - yr[order]
    else:
        order = np.argsort(yr, kind="stable")
        group = yr[order]
    xs, cs = layout.xr[order], layout.cid[order]
    rec_e = _records(xs, cs, layout.mx)
    rec_w = _records((layout.mx - 1) - xs, cs, layout.mx)
    hits = np.flatnonzero((rec_e | rec_w) & (group < m - 1))

    pts = layout.pts
    west, east = CandidateSet(Direction.WEST), CandidateSet(Direction.EAST)
    events = []
    current, dirty = -1, False
    for i, g, w, e in zip(order[hits].tolist(), group[hits].tolist(),
                          rec_w[hits].tolist(), rec_e[hits].tolist()):
        if g != current:
            if dirty:
                events.append((current, tuple(west.entries), tuple(east.entries)))
            current, dirty = g, False
        p = pts[i]
        if w and west.offer(p):
            dirty = True
        if e and east.offer(p):
            dirty = True
    if dirty:
        events.append((current, tuple(west.entries), tuple(east.entries)))
    return events


def _with_extremes(events):
    """Attach each snapshot's extreme x (west minimum, east maximum)."""
    return [(g, w, e, min(p.x for p in w), max(p.x for p in e)) for g, w, e in events]


def _state_at(events, starts, g):
    i = bisect_right(starts, g) - 1
    if i < 0:
        return (), ()
    return events[i][1], events[i][2]


def _plain_sweep(groups):
    """Reference sweep: offer every point, snapshot after every group."""
    west, east = CandidateSet(Direction.WEST), CandidateSet(Direction.EAST)
    out = []
    for g in groups[:-1]:
        for p in g:
            test_point(p, west, east)
        out.append((tuple(west.entries), tuple(east.entries)))
    return out


def _y_groups(points) -> List[List[ColoredPoint]]:
    """Points grouped by y, groups ascending, input order kept inside a group."""
    groups: List[List[ColoredPoint]] = []
    prev = object()
    for p in sorted(points, key=_by_y):
        if p.y != prev:
            prev = p.y
            current = [p]
            groups.append(current)
        else:
            current.append(p)
    return groups


def candidate_sweeps(points, lines: Optional[Sequence[IntermediateLine]] = None,
                     *, plain: bool = False) -> List[LineCandidates]:
    """Candidate sets of every intermediate line, ordered top to bottom.

    ``plain=True`` offers every point instead of the record points only; the
    results are identical and the flag exists for cross-checking.
    """
    pts = as_point_set(points)
    if plain:
        groups = _y_groups(pts)
        if lines is not None and len(lines) != max(len(groups) - 1, 0):
            raise ValueError("lines do not belong to this point set")
        upper = _plain_sweep(groups[::-1])
        lower = _plain_sweep(groups)[::-1]
        return [LineCandidates(ne, nw, sw, se) for (nw, ne), (sw, se) in zip(upper, lower)]
    if not pts:
        return []
    layout = _Layout(pts)
    m = layout.m
    if lines is not None and len(lines) != m - 1:
        raise ValueError("lines do not belong to this point set")
    up = _sweep(layout, downward=True)
    lo = _sweep(layout, downward=False)
    up_starts = [e[0] for e in up]
    lo_starts = [e[0] for e in lo]
    out = []
    for j in range(m - 1):
        nw, ne = _state_at(up, up_starts, j)
        sw, se = _state_at(lo, lo_starts, m - 2 - j)
        out.append(LineCandidates(ne, nw, sw, se))
    return out


def test_cross(ne, nw, sw, se, line: IntermediateLine) -> Optional[Cross]:
    """First (p, q, r, s) in NE x NW x SW x SE with distinct colors and
    overlapping open intervals (q.x, p.x), (r.x, s.x)."""
    if not (ne and nw and sw and se):
        return None
    # every witness tuple needs q.x < s.x, r.x < p.x, q.x < p.x and r.x < s.x
    east_up = max(p.x for p in ne)
    east_lo = max(s.x for s in se)
    west_up = min(q.x for q in nw)
    west_lo = min(r.x for r in sw)
    if not (west_up < east_up and west_up < east_lo and west_lo < east_up and west_lo < east_lo):
        return None
    for p in ne:
        pc = p.color
        for q in nw:
            qc = q.color
            if qc == pc or not q.x < p.x:
                continue
            for r in sw:
                rc = r.color
                if rc == pc or rc == qc:
                    continue
                for s in se:
                    sc = s.color
                    if sc == pc or sc == qc or sc == rc:
                        continue
                    lo = q.x if q.x > r.x else r.x
                    hi = p.x if p.x < s.x else s.x
                    if lo < hi:
                        return Cross((midpoint(lo, hi), line.value), (p, q, r, s))
    return None


test_cross.__test__ = False


def decide(points) -> Optional[Cross]:
    """Return a 4-colored cross of ``points``, or ``None`` if there is none.

    Lines are visited top to bottom and the first hit is returned. A line is
    only re-tested when one of its four candidate sets differs from the
    previous line's, since the outcome depends on nothing else.
    """
    pts = as_point_set(points)
    if len(pts) < 4:
        return None
    layout = _Layout(pts)
    if layout.k < 4 or layout.m < 2:
        return None
    # snapshots are many small tuples; cyclic GC passes over them are pure overhead
    reenable = gc.isenabled()
    gc.disable()
    try:
        return _decide(pts, layout)
    finally:
        if reenable:
            gc.enable()


def _decide(pts, layout: _Layout) -> Optional[Cross]:
    m = layout.m
    up = _with_extremes(_sweep(layout, downward=True))
    lo = _with_extremes(_sweep(layout, downward=False))
    if not up or not lo:
        return None
    # lower group g stops covering lines from m-1-g downward
    breaks = sorted({*(e[0] for e in up), *(m - 1 - e[0] for e in lo if e[0] >= 1)})
    ui, li = -1, len(lo) - 1
    ys = None
    for j in breaks:
        while ui + 1 < len(up) and up[ui + 1][0] <= j:
            ui += 1
        while li >= 0 and lo[li][0] > m - 2 - j:
            li -= 1
        if ui < 0 or li < 0:
            continue
        _, nw, ne, west_up, east_up = up[ui]
        _, sw, se, west_lo, east_lo = lo[li]
        if not (west_up < east_up and west_up < east_lo and west_lo < east_up and west_lo < east_lo):
            continue
        if ys is None:
            ys = distinct_ys(pts)
        found = test_cross(ne, nw, sw, se, IntermediateLine(ys[j], ys[j + 1], j))
        if found is not None:
            return found
    return None


def has_cross(points) -> bool:
    return decide(points) is not None
