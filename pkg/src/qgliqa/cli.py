"""``qgliqa`` command line tool.

Exit codes: 0 success, 1 usage error, 2 data-validation error, 3 I/O error.
"""
import argparse
import csv
import math
import sys
from pathlib import Path

from . import bench, edge_analysis
from .errors import DataValidationError, InvalidArgumentError, InvalidParameterError, QglError
from .filters import make_dx, make_dy, make_gaussian, make_log
from .images import load_image
from .qgl import QglConfig, score_pair
from .stats import psnr

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_IO = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_float(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(v) or v <= 0:
        raise argparse.ArgumentTypeError(f"must be finite and > 0, got {text}")
    return v


def _nonneg_float(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(v) or v < 0:
        raise argparse.ArgumentTypeError(f"must be finite and >= 0, got {text}")
    return v


def _float_list(text):
    return [_positive_float(t) for t in text.split(",") if t.strip()]


def _metric_list(text):
    metrics = [t.strip() for t in text.split(",") if t.strip()]
    bad = [m for m in metrics if m not in bench.METRICS]
    if bad or not metrics:
        raise argparse.ArgumentTypeError(f"unknown metric(s) {bad}; choose from {','.join(bench.METRICS)}")
    return metrics


def _add_config_flags(p, sigma_default):
    g = p.add_argument_group("model parameters")
    g.add_argument("--sigma", type=_positive_float, default=sigma_default,
                   help="scale of the LOG and derivative-of-Gaussian filters")
    g.add_argument("--k", type=_positive_float, default=None,
                   help="LOG/GM ratio factor; omitted means sqrt(2) * sigma")
    g.add_argument("--c0", type=_nonneg_float, default=1.0, help="normalization stabilizer")
    g.add_argument("--c1", type=_positive_float, default=0.0009, help="similarity stabilizer")
    g.add_argument("--norm-scale-mult", type=_positive_float, default=2.0,
                   help="normalization window scale as a multiple of sigma")


def _config(args) -> QglConfig:
    return QglConfig(sigma=args.sigma, k=args.k, c0=args.c0, c1=args.c1,
                     norm_scale_mult=args.norm_scale_mult)


def _config_line(cfg: QglConfig) -> str:
    return (f"# config sigma={cfg.sigma:g} k={cfg.k:.6f} c0={cfg.c0:g} c1={cfg.c1:g} "
            f"norm_scale_mult={cfg.norm_scale_mult:g}")


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentDefaultsHelpFormatter
    parser = _Parser(prog="qgliqa", formatter_class=fmt,
                     description="QGL full-reference image quality metrics and benchmarks.")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("score", formatter_class=fmt, help="score one distorted image against its reference")
    p.add_argument("ref", type=Path, help="reference image")
    p.add_argument("dist", type=Path, help="distorted image")
    p.add_argument("--psnr", action="store_true", help="also print PSNR in dB")
    _add_config_flags(p, 0.5)

    p = sub.add_parser("eval", formatter_class=fmt, help="SROCC tables over a manifest")
    p.add_argument("manifest", type=Path, help="manifest CSV")
    p.add_argument("--out", type=Path, required=True, help="group table CSV to write")
    p.add_argument("--summary", type=Path, default=None,
                   help="weighted-average/hit-number CSV (default: <out stem>_summary.csv)")
    p.add_argument("--metrics", type=_metric_list, default=["mqgl", "sqgl"], help="comma-separated metrics")
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: all cores)")
    _add_config_flags(p, 0.5)

    p = sub.add_parser("shift-bench", formatter_class=fmt, help="SROCC versus reference translation")
    p.add_argument("manifest", type=Path, help="manifest CSV")
    p.add_argument("--out", type=Path, required=True, help="shift curve CSV to write")
    p.add_argument("--max-shift", type=int, default=10, help="largest displacement in pixels")
    p.add_argument("--directions", choices=["both", *bench.DIRECTIONS], default="both")
    p.add_argument("--metrics", type=_metric_list, default=["mqgl", "sqgl"], help="comma-separated metrics")
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: all cores)")
    _add_config_flags(p, 1.0)

    p = sub.add_parser("edge-analysis", formatter_class=fmt, help="write step-edge theory tables")
    p.add_argument("--sigmas", type=_float_list, default=[0.5, 1.0, 2.0], help="comma-separated scales")
    p.add_argument("--ks", type=_float_list, default=[1.0],
                   help="comma-separated k values as multiples of sigma")
    p.add_argument("--out-dir", type=Path, required=True, help="directory for the CSV tables")

    p = sub.add_parser("kernels", formatter_class=fmt, help="dump Gaussian/LOG/dx/dy taps")
    p.add_argument("--sigma", type=_positive_float, default=0.5, help="kernel scale")
    p.add_argument("--out", type=Path, default=None, help="CSV path (default: stdout)")
    return parser


def cmd_score(args, out) -> int:
    cfg = _config(args)
    ref, dist = load_image(args.ref), load_image(args.dist)
    if ref.shape != dist.shape:
        raise DataValidationError(
            f"{args.ref} is {ref.shape[1]}x{ref.shape[0]} but {args.dist} is {dist.shape[1]}x{dist.shape[0]}"
        )
    s = score_pair(ref, dist, cfg)
    print(_config_line(cfg), file=out)
    print(f"mqgl={s.mqgl:.6f}", file=out)
    print(f"sqgl={s.sqgl:.6f}", file=out)
    if args.psnr:
        print(f"psnr={psnr(ref, dist):.6f}", file=out)
    return EXIT_OK


def _check_threads(args):
    if args.threads is not None and args.threads < 1:
        raise InvalidArgumentError("--threads must be >= 1")


def cmd_eval(args, out) -> int:
    _check_threads(args)
    records = bench.load_manifest(args.manifest)
    report = bench.evaluate_database(records, _config(args), args.metrics, threads=args.threads)
    bench.emit_report(report, args.out)
    summary = args.summary or args.out.with_name(args.out.stem + "_summary.csv")
    bench.emit_summary(report, summary)
    print(f"wrote {args.out} and {summary}", file=out)
    return EXIT_OK


def cmd_shift_bench(args, out) -> int:
    _check_threads(args)
    if args.max_shift < 0:
        raise InvalidArgumentError("--max-shift must be >= 0")
    directions = bench.DIRECTIONS if args.directions == "both" else (args.directions,)
    records = bench.load_manifest(args.manifest)
    curves = bench.shift_experiment(records, _config(args), args.max_shift, directions,
                                    args.metrics, threads=args.threads)
    bench.emit_report(curves, args.out)
    excluded = sum({c.database: c.excluded for c in curves}.values())
    if excluded:
        print(f"warning: {excluded} record(s) too small for --max-shift were excluded", file=sys.stderr)
    print(f"wrote {args.out}", file=out)
    return EXIT_OK


def cmd_edge_analysis(args, out) -> int:
    for path in edge_analysis.write_analysis(args.out_dir, args.sigmas, args.ks):
        print(f"wrote {path}", file=out)
    return EXIT_OK


def cmd_kernels(args, out) -> int:
    kernels = [("gaussian", make_gaussian(args.sigma)), ("log", make_log(args.sigma)),
               ("dx", make_dx(args.sigma)), ("dy", make_dy(args.sigma))]
    fh = open(args.out, "w", newline="") if args.out else out
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["kernel", "sigma", "y", "x", "tap"])
        for name, k in kernels:
            r = k.radius
            for i in range(k.size):
                for j in range(k.size):
                    w.writerow([name, f"{args.sigma:g}", i - r, j - r, f"{k.taps[i, j]:.12e}"])
    finally:
        if args.out:
            fh.close()
    return EXIT_OK


COMMANDS = {
    "score": cmd_score,
    "eval": cmd_eval,
    "shift-bench": cmd_shift_bench,
    "edge-analysis": cmd_edge_analysis,
    "kernels": cmd_kernels,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (InvalidParameterError, InvalidArgumentError) as exc:
        print(f"qgliqa: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataValidationError, QglError) as exc:
        print(f"qgliqa: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"qgliqa: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
