"""Seeded instance generators.

All randomness comes from numpy's PCG64 bit generator seeded through
``SeedSequence(seed)``; the same :class:`GenSpec` always yields the same
instance. Coordinates are Python ints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from .core import ColoredPoint, InvalidInputError, PointSet
from .reductions import CougInstance

KINDS = ("uniform", "grid", "monotone", "planted", "coug_chain")


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int
    k: int = 4
    seed: int = 0
    bbox: Tuple[int, int] = (0, 1_000_000)

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise InvalidInputError(f"unknown kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if self.n < 0:
            raise InvalidInputError(f"n must be >= 0, got {self.n}")
        lo, hi = self.bbox
        if hi <= lo:
            raise InvalidInputError(f"empty bbox {self.bbox}")
        if self.kind == "coug_chain":
            return
        if not 1 <= self.k <= max(self.n, 1):
            raise InvalidInputError(f"k must be in [1, max(n, 1)], got k={self.k}, n={self.n}")
        if self.kind == "planted":
            if self.n < 4 or self.k < 4:
                raise InvalidInputError("planted needs n >= 4 and k >= 4")
            if hi - lo < 3:
                raise InvalidInputError("planted needs a bbox at least 3 wide")


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def _points(xs, ys, cs) -> PointSet:
    return PointSet(map(ColoredPoint, xs.tolist(), ys.tolist(), cs.tolist()))


def _uniform(spec: GenSpec, rng) -> PointSet:
    lo, hi = spec.bbox
    n = spec.n
    return _points(rng.integers(lo, hi, n), rng.integers(lo, hi, n), rng.integers(0, spec.k, n))


def _grid(spec: GenSpec, rng) -> PointSet:
    lo, hi = spec.bbox
    n = spec.n
    side = max(1, math.isqrt(n - 1) + 1) if n else 1
    step = max(1, (hi - lo) // side)
    xs = lo + step * rng.integers(0, side, n)
    ys = lo + step * rng.integers(0, side, n)
    return _points(xs, ys, rng.integers(0, spec.k, n))


def _monotone(spec: GenSpec, rng) -> PointSet:
    # strictly increasing in both coordinates: no center sees both Q2 and Q4 occupied
    lo, _ = spec.bbox
    n = spec.n
    xs = lo + np.cumsum(rng.integers(1, 4, n))
    ys = lo + np.cumsum(rng.integers(1, 4, n))
    cs = np.arange(n) % spec.k
    return _points(xs, ys, cs)


def _planted(spec: GenSpec, rng) -> PointSet:
    lo, hi = spec.bbox
    cx = int(rng.integers(lo + 1, hi - 1))
    cy = int(rng.integers(lo + 1, hi - 1))
    colors = rng.choice(spec.k, size=4, replace=False).tolist()
    east = rng.integers(cx + 1, hi, 2).tolist()
    west = rng.integers(lo, cx, 2).tolist()
    north = rng.integers(cy + 1, hi, 2).tolist()
    south = rng.integers(lo, cy, 2).tolist()
    plant = [
        ColoredPoint(east[0], north[0], colors[0]),
        ColoredPoint(west[0], north[1], colors[1]),
        ColoredPoint(west[1], south[0], colors[2]),
        ColoredPoint(east[1], south[1], colors[3]),
    ]
    # extra points can never remove a cross, so noise is unconstrained
    m = spec.n - 4
    noise = PointSet(map(ColoredPoint, rng.integers(lo, hi, m).tolist(), rng.integers(lo, hi, m).tolist(),
                         np.asarray(colors)[rng.integers(0, 4, m)].tolist()))
    pts = plant + list(noise)
    return PointSet(pts[i] for i in rng.permutation(spec.n).tolist())


def _coug_chain(spec: GenSpec, rng) -> CougInstance:
    # odd values against even values: every gap is >= 1, a NO instance that
    # sits right at the boundary of the YES region
    n = spec.n
    odds = 2 * rng.permutation(n) + 1
    evens = 2 * rng.permutation(n) + 2
    return CougInstance(tuple(odds.tolist()), tuple(evens.tolist()))


_FAMILIES = {
    "uniform": _uniform,
    "grid": _grid,
    "monotone": _monotone,
    "planted": _planted,
    "coug_chain": _coug_chain,
}


def generate(spec: GenSpec) -> Union[PointSet, CougInstance]:
    spec.validate()
    return _FAMILIES[spec.kind](spec, rng_for(spec.seed))
