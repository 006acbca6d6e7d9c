"""Paired doubling-ratio run for decide against the centers oracle.

    python3 scripts/run_scaling.py --min-exp 12 --max-exp 20 --rounds 7
"""

import argparse
from dataclasses import dataclass

from fourcross.bench import paired_doubling
from fourcross.decider import decide
from fourcross.gen import GenSpec, generate
from fourcross.oracle import oracle_centers


@dataclass
class ScalingConfig:
    kind: str = "uniform"
    min_exp: int = 12
    max_exp: int = 20
    k: int = 8
    seed: int = 1
    rounds: int = 7
    oracle_max_exp: int = 7


def _report(title, sizes, medians, ratios):
    print(title)
    print(f"{'n':>9} {'median ms':>10} {'ratio':>6}")
    for i, (n, t) in enumerate(zip(sizes, medians)):
        r = f"{ratios[i - 1]:6.2f}" if i else "     -"
        print(f"{n:>9} {t / 1e6:>10.2f} {r}")


def run(cfg: ScalingConfig) -> None:
    sizes = [2 ** e for e in range(cfg.min_exp, cfg.max_exp + 1)]
    insts = [generate(GenSpec(cfg.kind, n, k=cfg.k, seed=cfg.seed, bbox=(0, 10 ** 12))) for n in sizes]
    _report(f"decide on {cfg.kind}, k={cfg.k}", sizes, *paired_doubling(decide, insts, cfg.rounds))

    small = [2 ** e for e in range(4, cfg.oracle_max_exp + 1)]
    insts = [generate(GenSpec("monotone", n, k=cfg.k, seed=cfg.seed)) for n in small]
    _report("\noracle_centers on monotone (NO instances)", small, *paired_doubling(oracle_centers, insts, 3))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, value in vars(ScalingConfig()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=type(value), default=value)
    run(ScalingConfig(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
