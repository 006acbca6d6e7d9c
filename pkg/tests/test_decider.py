from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fourcross.core import ColoredPoint, PointSet, verify_cross
from fourcross.decider import (
    CandidateSet,
    Direction,
    candidate_sweeps,
    decide,
    distinct_ys,
    intermediate_lines,
    test_cross as check_line,
    test_point as offer_both,
)
from fourcross.oracle import candidate_set_oracle, matches_characterization, oracle_centers, oracle_subsets
from helpers import colored_points, random_points

P = ColoredPoint


def ps(*rows):
    return PointSet(P(*r) for r in rows)


def test_distinct_ys():
    assert distinct_ys(ps((0, 1, 0), (5, 1, 0), (2, 3, 0))) == [3, 1]
    assert distinct_ys(ps((0, 0, 0))) == [0]
    assert distinct_ys(ps(*[(i, i, 0) for i in range(1, 6)])) == [5, 4, 3, 2, 1]
    assert distinct_ys(ps()) == []


def test_intermediate_lines():
    (line,) = intermediate_lines([3, 1])
    assert line.value == 2 and line.index == 0
    assert intermediate_lines([0]) == []
    values = [h.value for h in intermediate_lines([5, 4, 3, 2, 1])]
    assert values == [Fraction(9, 2), Fraction(7, 2), Fraction(5, 2), Fraction(3, 2)]


def test_line_sides():
    (line,) = intermediate_lines([3, 1])
    assert line.is_above((0, 3)) and not line.is_below((0, 3))
    assert line.is_below((0, 1)) and not line.is_above((0, 1))


def test_offer_west_keeps_further_west():
    west = CandidateSet(Direction.WEST, [P(3, 0, 0)])
    assert not west.offer(P(5, 0, 0))
    assert west.entries == [P(3, 0, 0)]


def test_offer_east_replaces_same_color():
    east = CandidateSet(Direction.EAST, [P(3, 0, 0)])
    assert east.offer(P(5, 0, 0))
    assert east.entries == [P(5, 0, 0)]


def test_offer_full_east_rejects_westward_point():
    east = CandidateSet(Direction.EAST, [P(2, 0, 1), P(4, 0, 2), P(6, 0, 3), P(8, 0, 4)])
    before = list(east.entries)
    assert not east.offer(P(0, 0, 9))
    assert east.entries == before


def test_offer_full_evicts_worst():
    east = CandidateSet(Direction.EAST, [P(2, 0, 1), P(4, 0, 2), P(6, 0, 3), P(8, 0, 4)])
    assert east.offer(P(5, 0, 9))
    assert sorted(q.color for q in east) == [2, 3, 4, 9]
    west = CandidateSet(Direction.WEST, [P(2, 0, 1), P(4, 0, 2), P(6, 0, 3), P(8, 0, 4)])
    assert west.offer(P(5, 0, 9))
    assert sorted(q.color for q in west) == [1, 2, 3, 9]


def test_offer_ties_keep_incumbent():
    east = CandidateSet(Direction.EAST, [P(2, 0, 1), P(4, 0, 2), P(6, 0, 3), P(8, 0, 4)])
    assert not east.offer(P(2, 5, 9))  # equal to worst, not strictly better
    assert not east.offer(P(8, 5, 4))  # same color, equal x
    assert P(8, 0, 4) in east.entries


def test_test_point_updates_both():
    west, east = CandidateSet(Direction.WEST), CandidateSet(Direction.EAST)
    offer_both(P(1, 0, 0), west, east)
    offer_both(P(3, 0, 0), west, east)
    assert west.entries == [P(1, 0, 0)] and east.entries == [P(3, 0, 0)]


def _as_sets(lc):
    return tuple(frozenset(s) for s in lc)


def test_sweeps_small():
    pts = ps((1, 2, 0), (2, 2, 1), (0, 0, 2))
    (lc,) = candidate_sweeps(pts)
    assert set(lc.ne) == {P(2, 2, 1), P(1, 2, 0)}
    assert set(lc.nw) == {P(1, 2, 0), P(2, 2, 1)}
    assert lc.sw == lc.se == (P(0, 0, 2),)


def test_sweeps_single_color():
    rng = np.random.default_rng(5)
    pts = random_points(rng, 60, 1, 20)
    for lc in candidate_sweeps(pts):
        assert all(len(s) <= 1 for s in lc)


def test_sweeps_planted_eight():
    # colors {0,1} above the separating line, {2,3} below
    pts = ps((1, 2, 0), (2, 1, 1), (-1, 1, 1), (-2, 3, 0),
             (-1, -1, 2), (-2, -2, 3), (1, -1, 3), (2, -3, 2))
    ys = distinct_ys(pts)
    lines = intermediate_lines(ys)
    j = ys.index(1)
    line = lines[j]
    assert line.y_below == -1
    lc = candidate_sweeps(pts, lines)[j]
    for entries, side, direction in zip(lc, ("above", "above", "below", "below"), ("east", "west", "west", "east")):
        assert len(entries) == 2
        ref = candidate_set_oracle(pts, line, side, direction)
        assert sorted((p.color, p.x) for p in entries) == sorted(ref)


@settings(max_examples=300)
@given(colored_points(max_size=30, max_color=7, grid=6))
def test_sweeps_match_characterization(pts):
    lines = intermediate_lines(distinct_ys(pts))
    swept = candidate_sweeps(pts, lines)
    assert len(swept) == len(lines)
    for line, lc in zip(lines, swept):
        for entries, side, direction in zip(lc, ("above", "above", "below", "below"), ("east", "west", "west", "east")):
            assert matches_characterization(entries, pts, line, side, direction)


@settings(max_examples=300)
@given(colored_points(max_size=30, max_color=7, grid=6))
def test_record_filtered_sweep_equals_plain(pts):
    assert candidate_sweeps(pts) == candidate_sweeps(pts, plain=True)


def test_check_line_symmetric():
    (line,) = intermediate_lines([1, -1])
    cross = check_line([P(1, 1, 0)], [P(-1, 1, 1)], [P(-1, -1, 2)], [P(1, -1, 3)], line)
    assert cross is not None and cross.center == (0, 0)
    assert verify_cross(cross)


def test_check_line_color_clash():
    (line,) = intermediate_lines([1, -1])
    assert check_line([P(1, 1, 0)], [P(-1, 1, 1)], [P(-1, -1, 2)], [P(1, -1, 0)], line) is None


def test_check_line_empty_interval():
    (line,) = intermediate_lines([1, -1])
    lower = [P(x, -1, c) for x, c in ((-5, 2), (-4, 4), (5, 3), (6, 5))]
    assert check_line([P(1, 1, 0)], [P(3, 1, 1)], lower, lower, line) is None


def test_check_line_deterministic_first_tuple():
    (line,) = intermediate_lines([1, -1])
    ne = [P(4, 1, 0), P(5, 1, 4)]
    nw = [P(-4, 1, 1)]
    sw = [P(-3, -1, 2)]
    se = [P(3, -1, 3)]
    cross = check_line(ne, nw, sw, se, line)
    assert cross.witnesses == (ne[0], nw[0], sw[0], se[0])
    assert cross.center == (0, 0)


def test_decide_basic_yes():
    cross = decide(ps((1, 1, 0), (-1, 1, 1), (-1, -1, 2), (1, -1, 3)))
    assert cross is not None and cross.center == (0, 0)


@pytest.mark.parametrize("n", [4, 10, 100])
def test_decide_staircase_no(n):
    pts = ps(*[(i, i, i % n) for i in range(n)])
    assert decide(pts) is None
    if n <= 10:
        assert oracle_centers(pts) is None


def test_decide_fast_paths():
    assert decide(ps()) is None
    assert decide(ps((0, 0, 0), (1, 1, 1), (2, 2, 2))) is None
    # plenty of points but only three colors
    assert decide(ps(*[(x, y, (x + y) % 3) for x in range(4) for y in range(4)])) is None
    assert decide(ps(*[(x, 7, x) for x in range(10)])) is None
    assert decide(ps(*[(7, y, y) for y in range(10)])) is None


def test_decide_rationals_and_big_ints():
    big = 10 ** 30
    pts = ps((big + 1, Fraction(1, 3), 0), (-big, Fraction(1, 3), 1),
             (-big, Fraction(-1, 3), 2), (big, Fraction(-1, 7), 7))
    cross = decide(pts)
    assert cross is not None and verify_cross(cross, pts)
    assert cross.center[1] == (Fraction(-1, 7) + Fraction(1, 3)) / 2


def test_decide_coincident_points_of_different_colors():
    pts = ps((1, 1, 0), (1, 1, 5), (-1, 1, 1), (-1, -1, 2), (1, -1, 0))
    cross = decide(pts)
    assert cross is not None and verify_cross(cross, pts)


@settings(max_examples=400)
@given(colored_points(max_size=12, max_color=5, grid=5))
def test_decide_matches_oracles(pts):
    got = decide(pts)
    assert (got is not None) == (oracle_centers(pts) is not None) == (oracle_subsets(pts) is not None)
    if got is not None:
        assert verify_cross(got, pts)
        ys = distinct_ys(pts)
        assert got.center[1] in {h.value for h in intermediate_lines(ys)}


@settings(max_examples=200)
@given(colored_points(max_size=14, max_color=5))
def test_decide_matches_oracle_on_rationals(pts):
    got = decide(pts)
    assert (got is not None) == (oracle_centers(pts) is not None)
    if got is not None:
        assert verify_cross(got, pts)


@settings(max_examples=200)
@given(colored_points(max_size=14, max_color=6, grid=5), st.randoms(use_true_random=False))
def test_decide_invariances(pts, rnd):
    base = decide(pts) is not None
    shuffled = list(pts)
    rnd.shuffle(shuffled)
    relabel = {c: 100 + 3 * i for i, c in enumerate(sorted(pts.colors, key=lambda _: rnd.random()))}
    variants = [
        [P(p.x + 7, p.y - Fraction(1, 2), p.color) for p in pts],
        [P(3 * p.x, 5 * p.y, p.color) for p in pts],
        shuffled,
        [P(p.x, p.y, relabel[p.color]) for p in pts],
        [P(p.y, p.x, p.color) for p in pts],
    ]
    for v in variants:
        assert (decide(v) is not None) == base
