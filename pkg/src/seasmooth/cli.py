"""Command-line interface.

Subcommands::

    seasmooth smooth   FILE  --method sea --glide 20
    seasmooth pipeline FILE  --trim auto --median 9 --glide 20 --expect-coarse 14 --expect-fine 28
    seasmooth analyze  FILE  --prominence 0.1
    seasmooth synth    {sinusoid,square,teeth,scan} [options]

FILE defaults to standard input. Exit codes: 0 success, 1 IO or parse
error, 2 invalid configuration, 3 pipeline precondition failure.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys

from . import io as sio
from . import synth
from .errors import (
    ConfigError,
    NoValidWindowError,
    PipelineError,
    SeriesParseError,
    WindowExceedsSeriesError,
)
from .peaks import PeakReport, count_peaks, decide_side
from .pipeline import METHODS, PipelineConfig, PipelineResult, SmootherSpec, TrimSpec, run_pipeline

EXIT_OK, EXIT_IO, EXIT_CONFIG, EXIT_PRECONDITION = 0, 1, 2, 3


def _range(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(t) for t in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    if not lo < hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _int_list(text: str) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _median_arg(text: str):
    if text in ("off", "none"):
        return None
    if text == "auto":
        return "auto"
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an odd integer, 'auto' or 'off', got {text!r}") from None


def _add_output(p: argparse.ArgumentParser, out_default: str | None = "-") -> None:
    p.add_argument("--emit", choices=sio.FORMATS, default="csv", help="output format (default csv)")
    p.add_argument("--out", default=out_default, help="output path, '-' for standard output")
    p.add_argument("--xrange", type=_range, help="svg view window LO:HI in 1-based indices")
    p.add_argument("--yrange", type=_range, help="svg value window LO:HI")


def _add_smoother(p: argparse.ArgumentParser, default_method: str = "sea") -> None:
    p.add_argument("--method", choices=METHODS, default=default_method)
    p.add_argument("--glide", type=int, default=10, help="glide length L >= 1 (alpha = 1/L)")
    p.add_argument("--alpha", type=float, help="smoothing weight, alternative to --glide")


def _add_decision(p: argparse.ArgumentParser) -> None:
    p.add_argument("--prominence", type=float, default=0.0)
    p.add_argument("--expect-coarse", type=int)
    p.add_argument("--expect-fine", type=int)
    p.add_argument("--tol", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seasmooth", description=__doc__.split("\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("smooth", help="apply one smoothing operator")
    p.add_argument("file", nargs="?", default="-")
    _add_smoother(p)
    _add_output(p)

    p = sub.add_parser("pipeline", help="trim, median filter, smooth, count, decide")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--trim", default="auto", help="off | auto | auto=F | eps=X | cut=P,S")
    p.add_argument("--median", type=_median_arg, default=None, help="odd glide length, auto or off")
    _add_smoother(p)
    _add_decision(p)
    _add_output(p, out_default=None)
    p.add_argument("--peaks-out", help="write the peak report (csv or gnuplot) here")
    p.add_argument("--stages-dir", help="write every intermediate series into this directory")

    p = sub.add_parser("analyze", help="count peaks and decide the side, no smoothing")
    p.add_argument("file", nargs="?", default="-")
    _add_decision(p)
    p.add_argument("--emit", choices=("csv", "gnuplot"), default="csv")
    p.add_argument("--out", help="write the peak report here")

    p = sub.add_parser("synth", help="generate synthetic test signals")
    kinds = p.add_subparsers(dest="kind", required=True)
    k = kinds.add_parser("sinusoid", help="two superposed sine tones")
    k.add_argument("--amp1", type=float, default=1.0)
    k.add_argument("--period1", type=float, default=500.0)
    k.add_argument("--amp2", type=float, default=0.1)
    k.add_argument("--period2", type=float, default=25.0)
    k.add_argument("--n", type=int, default=1000)
    _add_output(k)
    k = kinds.add_parser("square", help="partial Fourier sum of a square wave")
    k.add_argument("--order", type=int, default=10)
    k.add_argument("--n", type=int, default=1024)
    k.add_argument("--periods", type=int, default=4)
    _add_output(k)
    for name in ("teeth", "scan"):
        k = kinds.add_parser(name, help="tooth profile" if name == "teeth" else "full synthetic washer scan")
        k.add_argument("--teeth", type=int, default=14)
        k.add_argument("--samples-per-tooth", type=int, default=40)
        k.add_argument("--rise", type=float, default=0.7)
        k.add_argument("--base", type=float, default=1.0)
        k.add_argument("--height", type=float, default=3.0)
        k.add_argument("--artifacts", type=_int_list, default=(2, 6, 10) if name == "scan" else ())
        k.add_argument("--depth", type=float, default=1.0)
        k.add_argument("--width", type=int, default=6)
        k.add_argument(
            "--outliers",
            type=_int_list,
            default=(170, 171, 172, 173) if name == "scan" else (),
            help="0-based positions in the profile",
        )
        k.add_argument("--magnitude", type=float, default=20.0)
        if name == "scan":
            k.add_argument("--lead", type=int, default=40)
            k.add_argument("--tail", type=int, default=110)
            k.add_argument("--jitter", type=float, default=0.02)
            k.add_argument("--seed", type=int, default=7)
        _add_output(k)
    return parser


def _smoother(args) -> SmootherSpec:
    return SmootherSpec(args.method, args.glide, args.alpha)


def _write_series(series, args, peaks: PeakReport | None = None, title: str = "") -> None:
    opts = {}
    if args.emit == "svg":
        opts = dict(xrange=args.xrange, yrange=args.yrange, peaks=peaks, title=title)
    sio.emit(series, args.emit, args.out, **opts)


def _summary(report: PeakReport, decision=None, result: PipelineResult | None = None) -> str:
    lines = [f"count: {report.count}", "peaks: " + " ".join(str(i + 1) for i in report.peak_indices)]
    if result is not None:
        if result.trim is not None:
            lines.append(f"trimmed: prefix={result.trim.prefix_len} suffix={result.trim.suffix_len}")
        if result.median_glide is not None:
            lines.append(f"median: {result.median_glide}")
    if decision is not None:
        lines.append(f"verdict: {decision.verdict.value}")
    return "\n".join(lines) + "\n"


def cmd_smooth(args) -> None:
    y = sio.read_series(args.file)
    spec = _smoother(args)
    _write_series(spec.apply(y), args, title=spec.label())


def cmd_pipeline(args) -> None:
    cfg = PipelineConfig(
        trim=TrimSpec.parse(args.trim),
        median_glide=args.median,
        smoother=_smoother(args),
        prominence=args.prominence,
        expected_coarse=args.expect_coarse,
        expected_fine=args.expect_fine,
        tolerance=args.tol,
    )
    y = sio.read_series(args.file)
    result = run_pipeline(y, cfg)
    summary = _summary(result.report, result.decision, result)
    if args.out is not None:
        _write_series(result.final, args, result.report, cfg.smoother.label())
    # the summary must not interleave with a series written to stdout
    (sys.stderr if args.out == "-" else sys.stdout).write(summary)
    if args.peaks_out:
        sio.emit(result.report, "gnuplot" if args.emit == "gnuplot" else "csv", args.peaks_out)
    if args.stages_dir:
        os.makedirs(args.stages_dir, exist_ok=True)
        ext = {"csv": "csv", "gnuplot": "dat", "svg": "svg"}[args.emit]
        for name, series in result.stages.items():
            path = os.path.join(args.stages_dir, f"{name}.{ext}")
            opts = dict(xrange=args.xrange, yrange=args.yrange, title=name) if args.emit == "svg" else {}
            sio.emit(series, args.emit, path, **opts)


def cmd_analyze(args) -> None:
    decision = None
    if (args.expect_coarse is None) != (args.expect_fine is None):
        raise ConfigError("give both --expect-coarse and --expect-fine, or neither")
    y = sio.read_series(args.file)
    report = count_peaks(y, args.prominence)
    if args.expect_coarse is not None:
        decision = decide_side(report, args.expect_coarse, args.expect_fine, args.tol)
    sys.stdout.write(_summary(report, decision))
    if args.out:
        sio.emit(report, args.emit, args.out)


def cmd_synth(args) -> None:
    if args.kind == "sinusoid":
        y = synth.gen_sinusoid_pair(
            synth.SinusoidPair(args.amp1, args.period1, args.amp2, args.period2, args.n)
        )
    elif args.kind == "square":
        y = synth.gen_fourier_square(synth.FourierSquare(args.order, args.n, args.periods))
    else:
        profile = synth.ToothProfile(args.teeth, args.samples_per_tooth, args.rise, args.base, args.height)
        y = synth.gen_tooth_profile(profile)
        y = synth.inject_flank_artifacts(
            y, synth.FlankArtifacts(args.artifacts, args.depth, args.width), profile
        )
        y, _ = synth.inject_outliers(y, synth.Outliers(args.outliers, args.magnitude))
        if args.kind == "scan":
            y = synth.pad_zero_runs(
                y, synth.ZeroRuns(args.lead, args.tail, args.jitter, seed=args.seed)
            )
    _write_series(y, args, title=args.kind)


COMMANDS = {"smooth": cmd_smooth, "pipeline": cmd_pipeline, "analyze": cmd_analyze, "synth": cmd_synth}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        COMMANDS[args.command](args)
    except (SeriesParseError, OSError) as exc:
        print(f"seasmooth: error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ConfigError as exc:
        print(f"seasmooth: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (PipelineError, WindowExceedsSeriesError, NoValidWindowError) as exc:
        print(f"seasmooth: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(f"seasmooth: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
