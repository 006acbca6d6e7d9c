from fractions import Fraction
from itertools import permutations

import numpy as np
from hypothesis import strategies as st

from fourcross.core import ColoredPoint, PointSet


def random_points(rng: np.random.Generator, n: int, k: int, span: int) -> PointSet:
    xs = rng.integers(0, span, n).tolist()
    ys = rng.integers(0, span, n).tolist()
    cs = rng.integers(0, k, n).tolist()
    return PointSet(map(ColoredPoint, xs, ys, cs))


def rh4_by_permutations(pts) -> bool:
    """Literal definition: some assignment of the 4 points to Q1..Q4 works."""
    for a, b, c, d in permutations(pts):
        if max(b.x, c.x) < min(a.x, d.x) and max(c.y, d.y) < min(a.y, b.y):
            return True
    return False


coords = st.one_of(
    st.integers(-6, 6),
    st.fractions(min_value=-6, max_value=6, max_denominator=4),
).map(lambda v: int(v) if Fraction(v).denominator == 1 else Fraction(v))


@st.composite
def colored_points(draw, max_size=12, max_color=5, grid=None):
    c = st.integers(0, grid - 1) if grid else coords
    rows = draw(st.lists(st.tuples(c, c, st.integers(0, max_color)), max_size=max_size))
    return PointSet(ColoredPoint(x, y, col) for x, y, col in rows)
