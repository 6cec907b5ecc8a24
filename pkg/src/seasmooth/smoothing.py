"""Moving-average and exponential smoothing operators.

All operators take a :class:`~seasmooth.series.Series` (or anything array
like) and return a new :class:`Series`. Window averages shorten the data and
advance ``offset`` by the number of samples dropped at the front; the
exponential family preserves length.

Naming follows common usage:

* ``ma_general`` / ``ma_centered``: arithmetic mean over a sliding window.
* ``ea``: exponential average, evaluated left to right.
* ``rea``: exponential average evaluated right to left.
* ``sea``: symmetrized exponential average, the elementwise mean of ``ea``
  and ``rea``. It removes the phase lag of the one-sided average while
  keeping the full length of the series.
"""
from __future__ import annotations

import math

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .errors import WindowExceedsSeriesError
from .series import Series, SeriesLike, as_series


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not (0.0 <= alpha <= 1.0):
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def alpha_from_glide(glide: float) -> float:
    """Smoothing weight for a glide length ``L >= 1``, i.e. ``1 / L``."""
    if not math.isfinite(glide) or glide < 1:
        raise ValueError(f"glide length must be >= 1, got {glide}")
    return 1.0 / glide


def glide_from_alpha(alpha: float) -> float:
    alpha = check_alpha(alpha)
    if alpha == 0.0:
        raise ValueError("glide length is undefined for alpha = 0")
    return 1.0 / alpha


def _check_window(n_window: int, size: int) -> None:
    if n_window > size:
        raise WindowExceedsSeriesError(
            f"window of {n_window} samples exceeds series of length {size}"
        )


def ma_general(y: SeriesLike, n: int, ell: int) -> Series:
    """Moving arithmetic mean over ``n + 1`` samples.

    The value at position ``i`` averages ``y[i - ell] .. y[i + n - ell]``.
    The result has ``len(y) - n`` values; ``ell`` are dropped at the front
    and ``n - ell`` at the back. The averages themselves do not depend on
    ``ell``, only their alignment does.

    Raises
    ------
    WindowExceedsSeriesError
        if ``n + 1 > len(y)``.
    """
    y = as_series(y)
    n, ell = int(n), int(ell)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if not 0 <= ell <= n:
        raise ValueError(f"ell must satisfy 0 <= ell <= n, got ell={ell}, n={n}")
    _check_window(n + 1, len(y))
    sums = sliding_window_view(y.values, n + 1).sum(axis=1)
    return Series(sums / (n + 1), y.offset + ell)


def ma_centered(y: SeriesLike, ell: int) -> Series:
    """Centered moving mean over ``2 * ell + 1`` samples."""
    return ma_general(y, 2 * int(ell), int(ell))


def ma_centered_recursive(y: SeriesLike, ell: int) -> Series:
    """Centered moving mean by the running-sum recursion.

    Starts from the mean of the first ``2 * ell + 1`` values and updates by
    adding the entering sample and removing the leaving one, three
    arithmetic operations per value.
    """
    y = as_series(y)
    ell = int(ell)
    if ell < 0:
        raise ValueError(f"ell must be non-negative, got {ell}")
    width = 2 * ell + 1
    _check_window(width, len(y))
    v = y.values.tolist()
    out = [sum(v[:width]) / width]
    # output j corresponds to input position j + ell
    for i in range(ell + 1, len(v) - ell):
        out.append(out[-1] + (v[i + ell] - v[i - 1 - ell]) / width)
    return Series(out, y.offset + ell)


def _ea_values(v: list[float], alpha: float) -> list[float]:
    beta = 1.0 - alpha
    out = [v[0]]
    prev = v[0]
    for x in v[1:]:
        prev = beta * prev + alpha * x
        out.append(prev)
    return out


def ea(y: SeriesLike, alpha: float) -> Series:
    """Exponential average, ``s[0] = y[0]``, ``s[i] = (1-a) s[i-1] + a y[i]``."""
    y = as_series(y)
    alpha = check_alpha(alpha)
    return y.with_values(_ea_values(y.values.tolist(), alpha))


def rea(y: SeriesLike, alpha: float) -> Series:
    """Exponential average from the right, ``s[-1] = y[-1]``.

    Uses the same arithmetic as :func:`ea` on the reversed data, so
    ``rea(y) == reverse(ea(reverse(y)))`` holds bit for bit.
    """
    y = as_series(y)
    alpha = check_alpha(alpha)
    return y.with_values(_ea_values(y.values[::-1].tolist(), alpha)[::-1])


def sea(y: SeriesLike, alpha: float) -> Series:
    """Symmetrized exponential average: mean of :func:`ea` and :func:`rea`.

    Every output value draws on the whole series, gives the largest weight
    to the sample at its own position, and the left/right phase lags of the
    two one-sided passes cancel. Length is preserved.
    """
    y = as_series(y)
    alpha = check_alpha(alpha)
    v = y.values.tolist()
    fwd = _ea_values(v, alpha)
    bwd = _ea_values(v[::-1], alpha)[::-1]
    return y.with_values([(f + b) / 2 for f, b in zip(fwd, bwd)])


def ea_closed_form(y: SeriesLike, alpha: float) -> Series:
    """Exponential average from the explicit weighted sum.

    ``s[i] = (1-a)^i y[0] + a * sum_{r=1..i} (1-a)^(i-r) y[r]`` (0-based).
    Quadratic in the length; meant as a reference for :func:`ea`.
    """
    y = as_series(y)
    alpha = check_alpha(alpha)
    N = len(y)
    beta = 1.0 - alpha
    lag = np.arange(N)[:, None] - np.arange(N)[None, :]
    with np.errstate(under="ignore"):
        powers = beta ** np.arange(N, dtype=float)
        # row i holds alpha * beta**(i - r) for r <= i, zero above the diagonal
        padded = np.concatenate((alpha * powers, [0.0]))
        weights = padded[np.where(lag >= 0, lag, N)]
        weights[:, 0] = powers
        # columns ordered oldest (smallest weight) first
        values = (weights * y.values[None, :]).sum(axis=1)
    return y.with_values(values)
