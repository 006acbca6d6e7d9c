"""Random cross-check of decide against both brute-force oracles.

    python3 scripts/check_equivalence.py --trials 5000 --max-n 30
"""

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from fourcross.core import ColoredPoint, PointSet, verify_cross
from fourcross.decider import decide
from fourcross.oracle import oracle_centers, oracle_subsets


@dataclass
class EquivalenceConfig:
    trials: int = 5000
    max_n: int = 30
    max_k: int = 8
    span: int = 12
    seed: int = 0


def run(cfg: EquivalenceConfig) -> int:
    rng = np.random.default_rng(cfg.seed)
    yes = mismatches = 0
    for t in range(cfg.trials):
        n, k = int(rng.integers(0, cfg.max_n + 1)), int(rng.integers(1, cfg.max_k + 1))
        pts = PointSet(map(ColoredPoint, rng.integers(0, cfg.span, n).tolist(),
                           rng.integers(0, cfg.span, n).tolist(), rng.integers(0, k, n).tolist()))
        answers = [decide(pts), oracle_centers(pts), oracle_subsets(pts)]
        found = [a is not None for a in answers]
        sound = all(a is None or verify_cross(a, pts) for a in answers)
        yes += found[0]
        if len(set(found)) > 1 or not sound:
            mismatches += 1
            print(f"trial {t}: answers {found}, witnesses sound: {sound}", file=sys.stderr)
    print(f"{cfg.trials} trials, {yes} YES, {mismatches} mismatches")
    return 1 if mismatches else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, value in vars(EquivalenceConfig()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=type(value), default=value)
    return run(EquivalenceConfig(**vars(ap.parse_args())))


if __name__ == "__main__":
    sys.exit(main())
