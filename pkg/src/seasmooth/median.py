"""Moving median for outlier elimination.

A moving median with window ``2 * ell + 1`` discards every outlier as long
as no window holds more than ``ell`` of them; :func:`minimal_glide_length`
finds the smallest window with that property for a known outlier mask.
"""
from __future__ import annotations

from typing import Iterable

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from numpy.typing import ArrayLike

from .errors import NoValidWindowError, WindowExceedsSeriesError
from .series import Series, SeriesLike, as_series


def median_of(values: Iterable[float]) -> float:
    """Middle order statistic of an odd number of values.

    >>> median_of([1, 100, 2])
    2
    """
    ordered = sorted(values)
    if len(ordered) % 2 == 0:
        raise ValueError(f"median_of needs an odd number of values, got {len(ordered)}")
    return ordered[len(ordered) // 2]


def moving_median(y: SeriesLike, ell: int) -> Series:
    """Moving median with glide length ``2 * ell + 1``.

    Returns ``len(y) - 2 * ell`` values; output ``j`` is the median of
    ``y[j : j + 2 * ell + 1]`` and the offset advances by ``ell``. Each
    output value is a member of its window (no averaging of ties).
    """
    y = as_series(y)
    ell = int(ell)
    if ell < 0:
        raise ValueError(f"ell must be non-negative, got {ell}")
    width = 2 * ell + 1
    if width > len(y):
        raise WindowExceedsSeriesError(
            f"median window of {width} samples exceeds series of length {len(y)}"
        )
    windows = sliding_window_view(y.values, width)
    med = np.partition(windows, ell, axis=1)[:, ell]
    return Series(med, y.offset + ell)


def minimal_glide_length(mask: ArrayLike) -> int:
    """Smallest odd window ``2l + 1`` in which every window has ``<= l`` flagged samples.

    Parameters
    ----------
    mask : array_like of bool
        True at known outlier positions.

    Returns
    -------
    int
        ``1`` when nothing is flagged.

    Raises
    ------
    NoValidWindowError
        if no window up to the series length satisfies the rule.

    Notes
    -----
    The rule is not monotone in the window size: a window larger than the
    returned one may violate it (e.g. ``1100011`` admits 5 but not 7).
    """
    flags = np.asarray(mask, dtype=bool)
    if flags.ndim != 1 or flags.size == 0:
        raise ValueError("mask must be a non-empty one-dimensional sequence")
    if not flags.any():
        return 1
    csum = np.concatenate(([0], np.cumsum(flags, dtype=np.int64)))
    N = flags.size
    for ell in range(1, (N - 1) // 2 + 1):
        width = 2 * ell + 1
        counts = csum[width:] - csum[:-width]
        if counts.max() <= ell:
            return width
    raise NoValidWindowError(
        f"{int(flags.sum())} flagged samples in {N}: no odd window satisfies the rule"
    )


def threshold_outlier_mask(
    y: SeriesLike, ell: int = 10, k: float = 5.0, min_jump: float = 0.5
) -> np.ndarray:
    """Flag samples far from their local median.

    A sample is flagged when ``|y_i - m_i|`` exceeds both ``k`` times the
    scaled median absolute deviation of the residuals and ``min_jump``
    times the robust data range (1st to 99th percentile). ``m_i`` is the
    moving median with window ``2 * ell + 1``; edge samples use the nearest
    truncated window.

    This is a pragmatic detector; outlier positions are often known by
    inspection and can be passed to :func:`minimal_glide_length` directly.
    """
    y = as_series(y)
    v = y.values
    ell = min(int(ell), (len(v) - 1) // 2)
    local = np.empty_like(v)
    local[ell : len(v) - ell] = moving_median(v, ell).values
    for i in range(ell):
        local[i] = np.median(v[: i + ell + 1])
        local[-1 - i] = np.median(v[len(v) - 1 - i - ell :])
    resid = np.abs(v - local)
    spread = 1.4826 * float(np.median(resid))
    lo, hi = np.percentile(v, [1.0, 99.0])
    threshold = max(k * spread, min_jump * float(hi - lo))
    return resid > threshold
