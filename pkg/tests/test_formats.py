from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from fourcross.core import ColoredPoint, PointSet
from fourcross.formats import ParseError, parse_coug, parse_instance, serialize_coug, serialize_instance
from fourcross.reductions import CougInstance
from helpers import colored_points

P = ColoredPoint


def test_csv_decimal():
    (p,) = parse_instance(b"x,y,color\n0.5,1,0\n", "csv")
    assert p == P(Fraction(1, 2), 1, 0)


def test_json_rational_and_numbers():
    pts = parse_instance('{"points": [{"x": "1/3", "y": 2, "color": 4}, {"x": 0.1, "y": "-3", "color": 0}]}')
    assert pts[0] == P(Fraction(1, 3), 2, 4)
    assert pts[1].x == Fraction(1, 10)


@pytest.mark.parametrize("text, fmt, fragment", [
    ("x,y,color\n1,2\n", "csv", "line 2"),
    ("x,y,color\n1,2,0\n1,abc,0\n", "csv", "line 3"),
    ("x,y,color\n1,2,-1\n", "csv", "color"),
    ("a,b,c\n", "csv", "header"),
    ('{"points": [{"x": "1", "color": 0}]}', "json", "missing field 'y'"),
    ('{"points": [{"x": "1", "y": "1/0", "color": 0}]}', "json", "point 0"),
    ('{"points": [{"x": "1", "y": "1", "color": -2}]}', "json", "color"),
    ('{"points": [', "json", "line 1"),
    ('[]', "json", "points"),
])
def test_parse_errors(text, fmt, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_instance(text, fmt)


@given(colored_points(max_size=20, max_color=30))
def test_round_trip(pts):
    for fmt in ("json", "csv"):
        once = parse_instance(serialize_instance(pts, fmt), fmt)
        assert once == pts
        assert parse_instance(serialize_instance(once, fmt), fmt) == once


def test_round_trip_random_instances():
    rng = np.random.default_rng(9)
    for _ in range(1000):
        n = int(rng.integers(0, 12))
        nums = rng.integers(-50, 50, (n, 2)).tolist()
        dens = rng.integers(1, 9, (n, 2)).tolist()
        pts = PointSet(P(Fraction(a, da), Fraction(b, db), int(c))
                       for (a, b), (da, db), c in zip(nums, dens, rng.integers(0, 10, n).tolist()))
        pts = parse_instance(serialize_instance(pts, "json"))
        for fmt in ("json", "csv"):
            assert parse_instance(serialize_instance(pts, fmt), fmt) == pts


def test_sniffing():
    assert len(parse_instance(b'{"points": []}')) == 0
    assert len(parse_instance(b"x,y,color\n1,1,1\n")) == 1


def test_coug_formats():
    a = parse_coug("0 1/2 3\n1 2.5 -1\n")
    assert a == CougInstance((0, Fraction(1, 2), 3), (1, Fraction(5, 2), -1))
    b = parse_coug('{"xs": ["0", "1/2", 3], "ys": [1, "2.5", -1]}')
    assert a == b
    assert parse_coug(serialize_coug(a)) == a


@pytest.mark.parametrize("text", ["1 2\n", "1 x\n2 3\n", '{"xs": [1]}', "1 2\n3\n"])
def test_coug_errors(text):
    with pytest.raises(Exception):
        parse_coug(text)
