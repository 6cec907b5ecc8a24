"""Synthetic test signals.

Families:

* two superposed sine tones (slow base, small fast disturbance),
* truncated Fourier series of a +/-1 square wave (shows Gibbs overshoot),
* sawtooth-like tooth profiles with carved flank artifacts,
* injected outliers and zero runs around a profile.

All generators are deterministic; the only random element, the zero-run
jitter phase, is seeded explicitly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .series import Series, SeriesLike, as_series


@dataclass(frozen=True)
class SinusoidPair:
    amp1: float = 1.0
    period1: float = 500.0
    amp2: float = 0.1
    period2: float = 25.0
    n_samples: int = 1000

    def __post_init__(self):
        if not all(math.isfinite(a) for a in (self.amp1, self.amp2)):
            raise ValueError("amplitudes must be finite")
        if self.period2 < 2 or self.period1 < 2:
            raise ValueError("periods must be at least 2 samples")
        if not self.period1 > self.period2:
            raise ValueError("period1 (base tone) must exceed period2 (disturbance)")
        if self.n_samples < 2:
            raise ValueError("n_samples must be at least 2")


@dataclass(frozen=True)
class FourierSquare:
    """Partial Fourier sum of a square wave.

    ``order`` counts the odd harmonics kept, so order 10 runs up to the
    19th harmonic.
    """

    order: int = 10
    n_samples: int = 1024
    periods: int = 4

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be a positive integer")
        if self.periods < 1:
            raise ValueError("periods must be a positive integer")
        if self.n_samples < 2 or self.n_samples < 2 * self.periods:
            raise ValueError("need at least 2 samples per period")


@dataclass(frozen=True)
class ToothProfile:
    """Sawtooth-like teeth: linear rise over ``rise_fraction`` of the
    pitch, linear fall over the rest."""

    teeth: int = 14
    samples_per_tooth: int = 40
    rise_fraction: float = 0.7
    base_height: float = 1.0
    tooth_height: float = 3.0

    def __post_init__(self):
        if self.teeth < 1:
            raise ValueError("teeth must be >= 1")
        if self.samples_per_tooth < 2:
            raise ValueError("samples_per_tooth must be >= 2")
        if not 0.0 < self.rise_fraction < 1.0:
            raise ValueError("rise_fraction must lie in (0, 1)")
        if not (math.isfinite(self.base_height) and math.isfinite(self.tooth_height)):
            raise ValueError("heights must be finite")
        if self.tooth_height <= 0:
            raise ValueError("tooth_height must be positive")

    @property
    def rise_samples(self) -> float:
        return self.rise_fraction * self.samples_per_tooth

    @property
    def apex_offset(self) -> int:
        """Position of the tooth tip within one pitch."""
        return math.ceil(self.rise_samples)

    @property
    def fall_slope(self) -> float:
        return self.tooth_height / (self.samples_per_tooth - self.rise_samples)


@dataclass(frozen=True)
class Outliers:
    positions: Sequence[int] = ()
    magnitude: float = 20.0


@dataclass(frozen=True)
class FlankArtifacts:
    """Notches on the falling flanks of the listed teeth (0-based)."""

    tooth_indices: Sequence[int] = ()
    depth: float = 1.0
    width: int = 6


@dataclass(frozen=True)
class ZeroRuns:
    """Near-zero samples before and after a profile.

    ``jitter`` adds a small oscillation of period ``jitter_period`` samples
    with a seeded random phase, since real zero runs are not constant.
    """

    lead: int = 40
    tail: int = 110
    jitter: float = 0.0
    jitter_period: float = 4.0
    seed: int = 0


def gen_sinusoid_pair(spec: SinusoidPair) -> Series:
    i = np.arange(1, spec.n_samples + 1, dtype=float)
    y = spec.amp1 * np.sin(2 * np.pi * i / spec.period1) + spec.amp2 * np.sin(
        2 * np.pi * i / spec.period2
    )
    return Series(y)


def fourier_square_grid(spec: FourierSquare) -> np.ndarray:
    """Abscissae ``x_j = 2 pi * periods * j / n_samples``; a jump sits at ``x = 0``."""
    return 2 * np.pi * spec.periods * np.arange(spec.n_samples) / spec.n_samples


def gen_fourier_square(spec: FourierSquare) -> Series:
    x = fourier_square_grid(spec)
    y = np.zeros_like(x)
    for k in range(1, spec.order + 1):
        m = 2 * k - 1
        y += np.sin(m * x) / m
    return Series(4 / np.pi * y)


def inject_outliers(y: SeriesLike, spec: Outliers) -> tuple[Series, np.ndarray]:
    """Add ``spec.magnitude`` at each position; returns the data and the true mask."""
    y = as_series(y)
    mask = np.zeros(len(y), dtype=bool)
    for p in spec.positions:
        if not 0 <= p < len(y):
            raise ValueError(f"outlier position {p} outside series of length {len(y)}")
        mask[p] = True
    v = y.values.copy()
    v[mask] += spec.magnitude
    return y.with_values(v), mask


def gen_tooth_profile(spec: ToothProfile) -> Series:
    spt = spec.samples_per_tooth
    t = np.arange(spec.teeth * spt) % spt
    r = spec.rise_samples
    y = np.where(
        t < r,
        spec.base_height + spec.tooth_height * t / r,
        spec.base_height + spec.tooth_height * (spt - t) / (spt - r),
    )
    return Series(y)


def inject_flank_artifacts(y: SeriesLike, spec: FlankArtifacts, profile: ToothProfile) -> Series:
    """Carve a triangular notch into the falling flank of selected teeth.

    Along the notch the flank first drops faster, then climbs back to the
    undisturbed flank, which then keeps falling; each notch adds exactly
    one local maximum (at its right edge). ``y`` must be laid out like
    ``gen_tooth_profile(profile)``.
    """
    y = as_series(y)
    spt = profile.samples_per_tooth
    if len(y) != profile.teeth * spt:
        raise ValueError("series length does not match the tooth profile")
    if spec.depth < 0:
        raise ValueError("depth must be non-negative")
    if spec.depth == 0 or not spec.tooth_indices:
        return y
    w = int(spec.width)
    if not 2 <= w < spt * (1 - profile.rise_fraction):
        raise ValueError(
            f"artifact width must be >= 2 and < {spt * (1 - profile.rise_fraction):g}"
        )
    if 2 * spec.depth / w <= profile.fall_slope:
        raise ValueError("artifact too shallow to form a local maximum on the flank")
    apex = profile.apex_offset
    n_fall = spt - 1 - apex
    start_in_tooth = apex + max(0, (n_fall - w) // 2)
    tri = 1.0 - np.abs(2.0 * np.arange(w + 1) / w - 1.0)
    v = y.values.copy()
    for k in spec.tooth_indices:
        if not 0 <= k < profile.teeth:
            raise ValueError(f"tooth index {k} outside 0..{profile.teeth - 1}")
        s = k * spt + start_in_tooth
        v[s : s + w + 1] -= spec.depth * tri
    return y.with_values(v)


def pad_zero_runs(y: SeriesLike, spec: ZeroRuns) -> Series:
    """Surround a profile with zero runs, as produced by the laser scanner."""
    y = as_series(y)
    if spec.lead < 0 or spec.tail < 0:
        raise ValueError("zero-run lengths must be non-negative")
    lead = np.zeros(spec.lead)
    tail = np.zeros(spec.tail)
    if spec.jitter:
        rng = np.random.default_rng(spec.seed)
        for run in (lead, tail):
            phase = rng.uniform(0, 2 * np.pi)
            run += spec.jitter * np.sin(2 * np.pi * np.arange(run.size) / spec.jitter_period + phase)
    return Series(np.concatenate((lead, y.values, tail)))


@dataclass(frozen=True)
class ScanFixture:
    """A complete synthetic washer scan and its ground truth."""

    series: Series
    clean: Series
    outlier_mask: np.ndarray = field(repr=False)
    profile: ToothProfile
    artifacts: FlankArtifacts
    zero_runs: ZeroRuns


def synthetic_scan(
    profile: ToothProfile = ToothProfile(),
    artifacts: FlankArtifacts = FlankArtifacts(tooth_indices=(2, 6, 10)),
    outlier_start: int | None = 4 * 40 + 10,
    outlier_run: int = 4,
    outlier_magnitude: float = 20.0,
    zero_runs: ZeroRuns = ZeroRuns(jitter=0.02, seed=7),
) -> ScanFixture:
    """Tooth profile with flank notches, one outlier cluster and zero runs.

    ``outlier_start`` is relative to the profile (not the padded scan);
    the default puts the cluster on the rising flank of the fifth tooth.
    The defaults give 710 samples with a 40-sample lead and 110-sample
    tail.
    """
    clean = gen_tooth_profile(profile)
    y = inject_flank_artifacts(clean, artifacts, profile)
    positions = () if outlier_start is None else tuple(range(outlier_start, outlier_start + outlier_run))
    y, mask = inject_outliers(y, Outliers(positions, outlier_magnitude))
    padded = pad_zero_runs(y, zero_runs)
    full_mask = np.concatenate(
        (np.zeros(zero_runs.lead, bool), mask, np.zeros(zero_runs.tail, bool))
    )
    return ScanFixture(padded, clean, full_mask, profile, artifacts, zero_runs)
