"""Command-line interface.

Exit codes: 0 = YES, 1 = NO, 2 = error. Results go to stdout, diagnostics to
stderr. A file argument of ``-`` (the default) reads stdin.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import bench
from .core import InvalidInputError
from .decider import decide
from .formats import parse_coug, parse_instance, serialize_coug, serialize_instance, sniff_format
from .gen import KINDS, GenSpec, generate
from .oracle import oracle_centers, oracle_subsets
from .reductions import CnsInstance, reduce_cns_to_4cc, reduce_coug_to_cns, solve_2cns, solve_2coug
from .svg import emit_svg

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as f:
            return f.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from exc


def _write(path: Optional[str], data: bytes) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    try:
        with open(path, "wb") as f:
            f.write(data)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror}") from exc


def _load_points(path: str, fmt: Optional[str]):
    data = _read(path)
    text = data.decode("utf-8-sig", errors="replace")
    return parse_instance(data, fmt or sniff_format(text, None if path == "-" else path))


def _out_format(path: Optional[str], fmt: Optional[str]) -> str:
    if fmt:
        return fmt
    return "csv" if path and path.lower().endswith(".csv") else "json"


def _answer(cross) -> int:
    if cross is None:
        print("NO")
        return EXIT_NO
    print("YES")
    print(json.dumps(cross.to_json()))
    return EXIT_YES


def cmd_decide(args) -> int:
    return _answer(decide(_load_points(args.file, args.format)))


def cmd_oracle(args) -> int:
    fn = oracle_centers if args.method == "centers" else oracle_subsets
    return _answer(fn(_load_points(args.file, args.format)))


def cmd_gen(args) -> int:
    spec = GenSpec(args.kind, args.n, k=args.k, seed=args.seed, bbox=tuple(args.bbox))
    inst = generate(spec)
    if args.kind == "coug_chain":
        _write(args.output, serialize_coug(inst))
    else:
        _write(args.output, serialize_instance(inst, _out_format(args.output, args.format)))
    return 0


def cmd_reduce(args) -> int:
    if args.which == "coug2cns":
        out = reduce_coug_to_cns(parse_coug(_read(args.input))).points
    else:
        out = reduce_cns_to_4cc(CnsInstance(tuple(_load_points(args.input, args.format))))
    _write(args.output, serialize_instance(out, _out_format(args.output, args.out_format)))
    return 0


def cmd_solve(args) -> int:
    if args.problem == "2coug":
        yes = solve_2coug(parse_coug(_read(args.file)))
    else:
        yes = solve_2cns(CnsInstance(tuple(_load_points(args.file, args.format))))
    print("YES" if yes else "NO")
    return EXIT_YES if yes else EXIT_NO


def cmd_bench(args) -> int:
    kinds = [k for item in args.kinds for k in item.split(",") if k]
    families = bench.parse_families(kinds)

    def progress(row):
        print(f"{row.family} n={row.n} median={row.median_ns / 1e6:.2f} ms", file=sys.stderr)

    report = bench.run_scaling(families, args.min_n, args.max_n, reps=args.reps, k=args.k,
                               seed=args.seed, progress=progress)
    if args.output in (None, "-"):
        report.write_csv(sys.stdout)
    else:
        try:
            with open(args.output, "w", newline="") as f:
                report.write_csv(f)
        except OSError as exc:
            raise CliError(f"cannot write {args.output}: {exc.strerror}") from exc
    for fam, ratios in report.doubling_ratios().items():
        text = " ".join(f"{n}:{r:.2f}" for n, r in ratios)
        print(f"doubling ratios {fam}: {text}", file=sys.stderr)
    return 0


def cmd_plot(args) -> int:
    pts = _load_points(args.file, args.format)
    cross = decide(pts) if args.witness else None
    _write(args.output, emit_svg(pts, cross).encode())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fourcross", description="4-colored cross decision tools")
    sub = parser.add_subparsers(dest="command", required=True)

    def point_file(p):
        p.add_argument("file", nargs="?", default="-", help="instance file (JSON or CSV), '-' for stdin")
        p.add_argument("--format", choices=("json", "csv"), help="input format (default: by extension/content)")

    p = sub.add_parser("decide", help="decide with the O(n log n) sweep")
    point_file(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("oracle", help="decide by brute force")
    point_file(p)
    p.add_argument("--method", choices=("centers", "subsets"), default="centers")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bbox", type=int, nargs=2, metavar=("LO", "HI"), default=(0, 1_000_000))
    p.add_argument("--format", choices=("json", "csv"))
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="apply a lower-bound reduction")
    p.add_argument("which", choices=("coug2cns", "cns24cc"))
    p.add_argument("-i", "--input", default="-")
    p.add_argument("-o", "--output")
    p.add_argument("--format", choices=("json", "csv"), help="input point-set format")
    p.add_argument("--out-format", choices=("json", "csv"))
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("solve", help="solve 2COUG or 2CNS directly")
    p.add_argument("--problem", choices=("2coug", "2cns"), required=True)
    point_file(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="doubling-ratio scaling run")
    p.add_argument("--kinds", nargs="+", default=["uniform"],
                   help="families as KIND or TARGET:KIND, comma or space separated")
    p.add_argument("--min-n", type=int, default=1 << 10)
    p.add_argument("--max-n", type=int, default=1 << 16)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--k", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("plot", help="render an instance as SVG")
    point_file(p)
    p.add_argument("--witness", action="store_true", help="draw a cross found by decide")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, InvalidInputError, ValueError) as exc:
        print(f"fourcross: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
