"""Displacement of sinusoid maxima under EA, rEA and SEA.

Prints, for each maximum of a pure sine, where each smoother puts the
corresponding maximum. Peaks near the ends are marked because the
one-sided passes start from a single sample there.

    python3 scripts/phase_shift.py --period 256 --n 1024 --glide 40
"""
import argparse

import numpy as np

from seasmooth.peaks import count_peaks
from seasmooth.smoothing import ea, rea, sea


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--period", type=float, default=256)
    ap.add_argument("--n", type=int, default=1024)
    ap.add_argument("--glide", type=float, default=40)
    args = ap.parse_args()
    alpha = 1 / args.glide
    y = np.sin(2 * np.pi * np.arange(args.n) / args.period)
    ref = count_peaks(y).peak_indices
    found = {name: count_peaks(fn(y, alpha)).peak_indices for name, fn in (("ea", ea), ("rea", rea), ("sea", sea))}
    settle = 4 * args.glide
    print(f"{'input':>6} {'ea':>6} {'rea':>6} {'sea':>6}  note")
    for p in ref:
        shifts = [min(found[k], key=lambda q: abs(q - p)) - p for k in ("ea", "rea", "sea")]
        note = "" if settle <= p < args.n - settle else "edge transient"
        print(f"{p:>6} " + " ".join(f"{d:>+6d}" for d in shifts) + f"  {note}")


if __name__ == "__main__":
    main()
