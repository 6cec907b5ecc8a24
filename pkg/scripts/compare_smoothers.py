"""Peak counts per smoothing method and glide length.

Runs every operator over a range of glide lengths on the two-tone sinusoid
(where the slow tone has 2 maxima) and on the synthetic scan (14 teeth after
the median pre-filter), and prints one table per signal.

    python3 scripts/compare_smoothers.py --glides 5 10 20 40 60 100
"""
import argparse

from seasmooth.errors import PipelineError
from seasmooth.peaks import count_peaks
from seasmooth.pipeline import PipelineConfig, SmootherSpec, TrimSpec, run_pipeline
from seasmooth.synth import SinusoidPair, gen_sinusoid_pair, synthetic_scan

METHODS = ("ma", "median", "ea", "rea", "sea")


def counts(series, method, glides, median_glide=None):
    row = []
    for L in glides:
        if method == "median" and L % 2 == 0:
            L += 1
        cfg = PipelineConfig(trim=TrimSpec("auto"), median_glide=median_glide,
                             smoother=SmootherSpec(method, L))
        try:
            row.append(str(run_pipeline(series, cfg).report.count))
        except PipelineError:
            row.append("-")
    return row


def table(title, series, glides, median_glide=None):
    print(f"\n{title} (raw: {count_peaks(series).count} peaks)")
    print("method  " + "".join(f"{f'L={L}':>8}" for L in glides))
    for m in METHODS:
        print(f"{m:<8}" + "".join(f"{c:>8}" for c in counts(series, m, glides, median_glide)))


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--glides", type=int, nargs="+", default=[5, 10, 20, 40, 60, 100])
    args = ap.parse_args()
    table("two-tone sinusoid, 1000 samples", gen_sinusoid_pair(SinusoidPair()), args.glides)
    table("synthetic scan, median 9 first", synthetic_scan().series, args.glides, median_glide=9)


if __name__ == "__main__":
    main()
