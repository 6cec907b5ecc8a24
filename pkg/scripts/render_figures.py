"""Write SVG figures for the standard synthetic signals.

Produces, in ``--outdir`` (default ``figures/``):

* square_raw.svg / square_sea.svg: order-10 square wave before and after SEA,
* sinusoid_{raw,ma,sea}.svg: two-tone signal and two smoothers,
* scan_{input,trim,median,smooth}.svg: every pipeline stage of the synthetic
  scan, with detected teeth marked on the final stage.
"""
import argparse
from pathlib import Path

from seasmooth.io import emit
from seasmooth.peaks import count_peaks
from seasmooth.pipeline import PipelineConfig, SmootherSpec, run_pipeline
from seasmooth.smoothing import ma_centered, sea
from seasmooth.synth import FourierSquare, SinusoidPair, gen_fourier_square, gen_sinusoid_pair, synthetic_scan


def save(series, path, title, peaks=None):
    emit(series, "svg", path, title=title, peaks=peaks)
    print(path)


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--outdir", type=Path, default=Path("figures"))
    args = ap.parse_args()
    out = args.outdir
    out.mkdir(parents=True, exist_ok=True)

    sq = gen_fourier_square(FourierSquare(order=10, n_samples=1024, periods=4))
    save(sq, out / "square_raw.svg", "order-10 square wave")
    save(sea(sq, 1 / 40), out / "square_sea.svg", "after sea, L=40")

    sp = gen_sinusoid_pair(SinusoidPair())
    save(sp, out / "sinusoid_raw.svg", "two-tone sinusoid", count_peaks(sp))
    for name, s in (("ma", ma_centered(sp, 20)), ("sea", sea(sp, 1 / 40))):
        save(s, out / f"sinusoid_{name}.svg", f"{name}, L=40/41", count_peaks(s))

    cfg = PipelineConfig(median_glide=9, smoother=SmootherSpec("sea", 20))
    result = run_pipeline(synthetic_scan().series, cfg)
    for name, s in result.stages.items():
        peaks = result.report if name == "smooth" else None
        save(s, out / f"scan_{name}.svg", f"scan: {name}", peaks)


if __name__ == "__main__":
    main()
