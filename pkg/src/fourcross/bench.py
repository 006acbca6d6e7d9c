"""Doubling-ratio scaling measurements.

Each cell generates one instance per size from a fixed seed, discards a
warm-up run and records the median of ``reps`` timed runs. Rows go to CSV as
``family,n,reps,median_ns,ns_per_nlogn`` where the family is
``<target>:<kind>`` (e.g. ``decide:uniform``).
"""

from __future__ import annotations

import csv
import gc
import math
import statistics
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from .decider import decide
from .gen import GenSpec, generate
from .oracle import oracle_centers, oracle_subsets
from .reductions import reduce_cns_to_4cc, reduce_coug_to_cns

TARGETS: Dict[str, Callable] = {
    "decide": decide,
    "oracle_centers": oracle_centers,
    "oracle_subsets": oracle_subsets,
    "reduce_coug_to_cns": reduce_coug_to_cns,
    "chain": lambda inst: decide(reduce_cns_to_4cc(reduce_coug_to_cns(inst))),
}

CSV_FIELDS = ("family", "n", "reps", "median_ns", "ns_per_nlogn")


@dataclass
class BenchRow:
    family: str
    n: int
    reps: int
    median_ns: int

    @property
    def ns_per_nlogn(self) -> float:
        return self.median_ns / (self.n * math.log2(self.n)) if self.n > 1 else float(self.median_ns)


@dataclass
class BenchReport:
    rows: List[BenchRow] = field(default_factory=list)

    def families(self) -> List[str]:
        return list(dict.fromkeys(r.family for r in self.rows))

    def doubling_ratios(self) -> Dict[str, List[Tuple[int, float]]]:
        """Per family, ``(n, T(n) / T(n/2))`` for each consecutive doubling."""
        out: Dict[str, List[Tuple[int, float]]] = {}
        for fam in self.families():
            rows = sorted((r for r in self.rows if r.family == fam), key=lambda r: r.n)
            out[fam] = [(b.n, b.median_ns / a.median_ns) for a, b in zip(rows, rows[1:])
                        if b.n == 2 * a.n and a.median_ns > 0]
        return out

    def write_csv(self, f) -> None:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in self.rows:
            w.writerow([r.family, r.n, r.reps, r.median_ns, f"{r.ns_per_nlogn:.4f}"])


def time_call(fn: Callable, arg, reps: int, min_seconds: float = 0.0, max_reps: int = 200) -> int:
    """Median wall time of ``fn(arg)`` in ns over at least ``reps`` runs.

    Short calls are repeated until ``min_seconds`` of samples have been
    collected (up to ``max_reps``), which keeps small-n medians stable.
    """
    fn(arg)  # warm-up, discarded
    gc.collect()
    samples = []
    spent = 0
    while len(samples) < reps or (spent < min_seconds * 1e9 and len(samples) < max_reps):
        t0 = time.perf_counter_ns()
        fn(arg)
        dt = time.perf_counter_ns() - t0
        samples.append(dt)
        spent += dt
    return int(statistics.median(samples))


def paired_doubling(fn: Callable, instances: Sequence, rounds: int = 7) -> Tuple[List[int], List[float]]:
    """Round-robin timing over instances of doubling size.

    Every round times each instance once, smallest first, so neighbouring
    sizes are measured seconds apart. Returns per-instance median times (ns)
    and, per consecutive pair, the median of the within-round ratios. Pairing
    cancels slow stretches on a shared host that would otherwise land on one
    size only.
    """
    if rounds < 3:
        raise ValueError("rounds must be >= 3")
    for inst in instances:
        fn(inst)  # warm-up, discarded
    gc.collect()
    samples: List[List[int]] = [[] for _ in instances]
    for _ in range(rounds):
        for i, inst in enumerate(instances):
            t0 = time.perf_counter_ns()
            fn(inst)
            samples[i].append(time.perf_counter_ns() - t0)
    medians = [int(statistics.median(s)) for s in samples]
    ratios = [statistics.median(b / a for a, b in zip(sa, sb)) for sa, sb in zip(samples, samples[1:])]
    return medians, ratios


def doubling_sizes(min_n: int, max_n: int) -> List[int]:
    sizes = []
    n = min_n
    while n <= max_n:
        sizes.append(n)
        n *= 2
    return sizes


def run_scaling(families: Iterable[Tuple[str, str]], min_n: int, max_n: int, reps: int = 3,
                k: int = 8, seed: int = 0, min_seconds: float = 0.0,
                progress: Callable[[BenchRow], None] = None) -> BenchReport:
    """Time each ``(target, kind)`` family over ``min_n, 2*min_n, ... <= max_n``."""
    if reps < 3:
        raise ValueError("reps must be >= 3")
    report = BenchReport()
    for target, kind in families:
        fn = TARGETS[target]
        for n in doubling_sizes(min_n, max_n):
            inst = generate(GenSpec(kind, n, k=min(k, max(n, 1)), seed=seed))
            row = BenchRow(f"{target}:{kind}", n, reps, time_call(fn, inst, reps, min_seconds))
            report.rows.append(row)
            if progress is not None:
                progress(row)
    return report


def parse_families(spec: Sequence[str]) -> List[Tuple[str, str]]:
    """``["decide:uniform", "oracle_centers:monotone"]`` -> pairs; a bare
    kind means ``decide:<kind>`` (``chain`` for ``coug_chain``)."""
    out = []
    for item in spec:
        target, _, kind = item.rpartition(":")
        target = target or ("chain" if kind == "coug_chain" else "decide")
        if target not in TARGETS:
            raise ValueError(f"unknown bench target {target!r}")
        out.append((target, kind))
    return out
