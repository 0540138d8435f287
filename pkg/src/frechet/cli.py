"""Command line interface.

Point files are plain text: one point per line, coordinates separated by
whitespace and/or commas, blank lines and ``#`` comments ignored.  Distances
go to stdout as a single number; everything diagnostic goes to stderr, so the
output stays pipeable.

Exit codes: 0 success, 2 usage error (from argument parsing), 3 invalid
input data or an unsatisfiable request, 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
import traceback

import numpy as np

from .algorithms import (
    frechet_closed_oracle,
    frechet_open,
    witness_coupling,
)
from .bench import CLOSED_ALGORITHMS, CURVE_KINDS, Counters, gen_curve, run_bench
from .errors import InputError
from .metric_core import NAMED_METRICS
from .selftest import run_selftest

__all__ = ["main", "parse_points", "format_points"]


def parse_points(text: str, source: str = "<input>") -> np.ndarray:
    """Parse a points file into an (m, d) float array; InputError on bad rows."""
    rows: list[list[float]] = []
    dim = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.replace(",", " ").split()
        try:
            row = [float(f) for f in fields]
        except ValueError:
            raise InputError(f"{source}:{lineno}: not a number in {line!r}") from None
        if not all(np.isfinite(row)):
            raise InputError(f"{source}:{lineno}: coordinates must be finite")
        if dim is None:
            dim = len(row)
        elif len(row) != dim:
            raise InputError(
                f"{source}:{lineno}: expected {dim} coordinates, found {len(row)}"
            )
        rows.append(row)
    if not rows:
        raise InputError(f"{source}: no points found")
    return np.asarray(rows, dtype=np.float64)


def format_points(points, precision: int = 17) -> str:
    arr = np.asarray(points, dtype=np.float64)
    fmt = f"%.{precision}g"
    return "\n".join(" ".join(fmt % x for x in row) for row in arr) + "\n"


def _read_points(path: str) -> np.ndarray:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return parse_points(text, source=path)


def _emit_stats(counters: Counters) -> None:
    for key, val in counters.as_dict().items():
        if isinstance(val, list):
            val = ",".join(str(x) for x in val)
        print(f"{key}={val}", file=sys.stderr)


def _write_witness(path: str, coupling, m: int, n: int, metric: str, delta: float) -> None:
    lines = [
        "# cyclic coupling witness",
        f"# m={m} n={n} metric={metric} anchor={coupling.pairs[0][0]}",
        f"# delta={delta:.17g} length={coupling.length:.17g}",
    ]
    lines += [f"{a} {b}" for a, b in coupling.pairs]
    text = "\n".join(lines) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_closed(args) -> int:
    u = _read_points(args.curve_u)
    v = _read_points(args.curve_v)
    if args.algorithm == "naive":
        counters = None
        value = frechet_closed_oracle(u, v, metric=args.metric)
    else:
        counters = Counters()
        value = CLOSED_ALGORITHMS[args.algorithm](u, v, metric=args.metric, counters=counters)
    if args.witness is not None:
        delta = value if args.delta is None else args.delta
        coupling = witness_coupling(u, v, delta, metric=args.metric)
        _write_witness(args.witness, coupling, len(u), len(v), args.metric, delta)
    if args.json:
        payload = {
            "distance": value,
            "algorithm": args.algorithm,
            "metric": args.metric,
            "m": len(u),
            "n": len(v),
        }
        if counters is not None:
            payload["counters"] = counters.as_dict()
        print(json.dumps(payload))
    else:
        print(f"%.{args.precision}g" % value)
    if args.stats and counters is not None:
        _emit_stats(counters)
    return 0


def _cmd_open(args) -> int:
    u = _read_points(args.curve_u)
    v = _read_points(args.curve_v)
    value = frechet_open(u, v, metric=args.metric)
    if args.json:
        print(
            json.dumps(
                {"distance": value, "metric": args.metric, "m": len(u), "n": len(v)}
            )
        )
    else:
        print(f"%.{args.precision}g" % value)
    return 0


def _cmd_gen(args) -> int:
    pts = gen_curve(args.kind, args.count, seed=args.seed)
    text = format_points(pts, precision=args.precision)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def _cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    report = run_bench(
        sizes,
        algorithms=algorithms,
        reps=args.reps,
        seed=args.seed,
        kind=args.kind,
        metric=args.metric,
    )
    csv = report.to_csv()
    if args.csv == "-":
        sys.stdout.write(csv)
    else:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(csv)
    return 0


def _cmd_selftest(args) -> int:
    ok = run_selftest(max_size=args.max_size, cases=args.cases, seed=args.seed)
    return 0 if ok else 4


def _add_metric(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--metric",
        choices=sorted(NAMED_METRICS),
        default="euclidean",
        help="point metric (default: euclidean)",
    )


def _add_precision(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--precision",
        type=int,
        default=17,
        metavar="DIGITS",
        help="significant digits for printed numbers (default: 17)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frechet",
        description="Discrete Frechet distance for open and closed polygonal curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("closed", help="distance between two closed (cyclic) curves")
    p.add_argument("curve_u", help="points file for the first curve")
    p.add_argument("curve_v", help="points file for the second curve")
    p.add_argument(
        "--algorithm",
        choices=["naive", *sorted(CLOSED_ALGORITHMS)],
        default="logstar",
        help="algorithm to run (default: logstar)",
    )
    _add_metric(p)
    _add_precision(p)
    p.add_argument("--json", action="store_true", help="print a JSON object instead")
    p.add_argument("--stats", action="store_true", help="print operation counts to stderr")
    p.add_argument(
        "--witness",
        metavar="PATH",
        help="also write a cyclic coupling witness to PATH ('-' for stdout)",
    )
    p.add_argument(
        "--delta",
        type=float,
        default=None,
        help="witness threshold (default: the computed distance)",
    )
    p.set_defaults(func=_cmd_closed)

    p = sub.add_parser("open", help="distance between two open curves")
    p.add_argument("curve_u", help="points file for the first curve")
    p.add_argument("curve_v", help="points file for the second curve")
    _add_metric(p)
    _add_precision(p)
    p.add_argument("--json", action="store_true", help="print a JSON object instead")
    p.set_defaults(func=_cmd_open)

    p = sub.add_parser("gen", help="generate a reproducible test curve")
    p.add_argument("--n", type=int, required=True, dest="count", help="number of vertices")
    p.add_argument("--kind", choices=CURVE_KINDS, default="noisy-polygon")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "-o", "--out", default="-", metavar="PATH", help="output file (default: stdout)"
    )
    _add_precision(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="time the closed-curve algorithms, CSV output")
    p.add_argument("--sizes", default="64,128,256", help="comma-separated vertex counts")
    p.add_argument(
        "--algorithms",
        default=",".join(sorted(CLOSED_ALGORITHMS)),
        help="comma-separated algorithm names (default: all)",
    )
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kind", choices=CURVE_KINDS, default="noisy-polygon")
    _add_metric(p)
    p.add_argument("--csv", default="-", metavar="PATH", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("selftest", help="run built-in consistency checks")
    p.add_argument("--max-size", type=int, default=8)
    p.add_argument("--cases", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except Exception:  # noqa: BLE001 - surface as a diagnosed internal failure
        traceback.print_exc()
        return 4


if __name__ == "__main__":
    sys.exit(main())
