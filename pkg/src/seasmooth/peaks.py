"""Zero-run trimming, peak counting and the coarse/fine side decision."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ConfigError
from .series import Series, SeriesLike, as_series


@dataclass(frozen=True)
class TrimResult:
    """Outcome of removing the leading and trailing zero runs.

    ``trimmed`` is None when every sample was within the threshold; then
    ``prefix_len`` equals the original length and ``suffix_len`` is 0.
    """

    trimmed: Optional[Series]
    prefix_len: int
    suffix_len: int

    @property
    def everything_trimmed(self) -> bool:
        return self.trimmed is None

    @property
    def original_length(self) -> int:
        kept = 0 if self.trimmed is None else len(self.trimmed)
        return self.prefix_len + kept + self.suffix_len


def auto_epsilon(y: SeriesLike, fraction: float = 0.01) -> float:
    """Trim threshold as a fraction of the value range."""
    v = as_series(y).values
    return fraction * float(v.max() - v.min())


def trim_zero_runs(y: SeriesLike, epsilon: float) -> TrimResult:
    """Drop the maximal leading and trailing runs with ``|y_i| <= epsilon``.

    Interior samples below the threshold are kept.
    """
    if not epsilon >= 0:
        raise ValueError(f"epsilon must be non-negative, got {epsilon}")
    y = as_series(y)
    above = np.flatnonzero(np.abs(y.values) > epsilon)
    if above.size == 0:
        return TrimResult(None, len(y), 0)
    first, last = int(above[0]), int(above[-1])
    return TrimResult(
        Series(y.values[first : last + 1], y.offset + first),
        first,
        len(y) - 1 - last,
    )


def trim_explicit(y: SeriesLike, prefix: int, suffix: int) -> TrimResult:
    """Cut fixed numbers of samples from both ends."""
    y = as_series(y)
    if prefix < 0 or suffix < 0:
        raise ValueError("prefix and suffix must be non-negative")
    if prefix + suffix > len(y):
        raise ValueError(f"cannot cut {prefix}+{suffix} samples from a series of {len(y)}")
    if prefix + suffix == len(y):
        return TrimResult(None, len(y), 0)
    return TrimResult(
        Series(y.values[prefix : len(y) - suffix], y.offset + prefix), prefix, suffix
    )


@dataclass(frozen=True)
class PeakReport:
    """Counted maxima, in original 0-based indexing.

    A plateau peak is anchored at its first sample; ``plateau_lengths``
    holds the run length of each peak and ``prominences`` its height above
    the higher of its two separating valleys.
    """

    peak_indices: tuple[int, ...] = ()
    plateau_lengths: tuple[int, ...] = ()
    prominences: tuple[float, ...] = ()

    @property
    def count(self) -> int:
        return len(self.peak_indices)


def _runs(v: np.ndarray):
    """Start indices and lengths of maximal runs of equal values."""
    change = np.flatnonzero(v[1:] != v[:-1]) + 1
    starts = np.concatenate(([0], change))
    lengths = np.diff(np.concatenate((starts, [v.size])))
    return starts, lengths


def count_peaks(y: SeriesLike, min_prominence: float = 0.0) -> PeakReport:
    """Count local maxima, treating a flat top as a single peak.

    A peak is a maximal run of equal values strictly greater than the
    values on both sides of it. Runs touching the first or last sample are
    never peaks. With ``min_prominence > 0`` a peak is kept only if it
    rises at least that much above the higher of the two valley minima
    between it and its neighbouring candidates (or the series ends).
    """
    if not min_prominence >= 0:
        raise ValueError(f"min_prominence must be non-negative, got {min_prominence}")
    y = as_series(y)
    v = y.values
    if v.size < 3:
        return PeakReport()
    starts, lengths = _runs(v)
    rv = v[starts]
    cand = [
        j for j in range(1, len(starts) - 1) if rv[j] > rv[j - 1] and rv[j] > rv[j + 1]
    ]
    peaks, plateaus, proms = [], [], []
    for pos, j in enumerate(cand):
        lo = starts[cand[pos - 1]] + lengths[cand[pos - 1]] if pos > 0 else 0
        hi = starts[cand[pos + 1]] if pos + 1 < len(cand) else v.size
        left = v[lo : starts[j]].min()
        right = v[starts[j] + lengths[j] : hi].min()
        prom = float(rv[j] - max(left, right))
        if min_prominence > 0 and prom < min_prominence:
            continue
        peaks.append(int(starts[j]) + y.offset)
        plateaus.append(int(lengths[j]))
        proms.append(prom)
    return PeakReport(tuple(peaks), tuple(plateaus), tuple(proms))


class Side(str, enum.Enum):
    COARSE = "coarse"
    FINE = "fine"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SideDecision:
    verdict: Side
    measured_count: int
    expected_coarse: int
    expected_fine: int
    tolerance: int


def check_side_bands(expected_coarse: int, expected_fine: int, tolerance: int) -> None:
    if expected_coarse == expected_fine:
        raise ConfigError("expected coarse and fine counts must differ")
    if tolerance < 0:
        raise ConfigError(f"tolerance must be non-negative, got {tolerance}")
    if 2 * tolerance >= abs(expected_coarse - expected_fine):
        raise ConfigError(
            f"tolerance {tolerance} makes the bands around {expected_coarse} "
            f"and {expected_fine} overlap"
        )


def decide_side(
    report: PeakReport | int, expected_coarse: int, expected_fine: int, tolerance: int = 1
) -> SideDecision:
    """Classify the measured side from the tooth count.

    ``report`` may also be a plain count. The tolerance bands around the
    two expected counts must be disjoint.
    """
    check_side_bands(expected_coarse, expected_fine, tolerance)
    count = report.count if isinstance(report, PeakReport) else int(report)
    if abs(count - expected_coarse) <= tolerance:
        verdict = Side.COARSE
    elif abs(count - expected_fine) <= tolerance:
        verdict = Side.FINE
    else:
        verdict = Side.UNKNOWN
    return SideDecision(verdict, count, expected_coarse, expected_fine, tolerance)
