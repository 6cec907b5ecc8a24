"""Measurement series with original-index bookkeeping.

Window operators (moving average, moving median) and zero-run trimming
shorten a series. Every :class:`Series` therefore carries ``offset``, the
number of samples of the original measurement that precede its first value,
so that positions found downstream can be mapped back to the raw scan.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np
from numpy.typing import ArrayLike


@dataclass(frozen=True, eq=False)
class Series:
    """Finite, non-empty sequence of equidistant measurement values.

    Parameters
    ----------
    values : array_like
        One-dimensional finite real values. Stored as a read-only float
        array.
    offset : int
        Original (0-based) index of ``values[0]``.
    """

    values: np.ndarray
    offset: int = 0

    def __post_init__(self):
        arr = np.array(self.values, dtype=float)
        if arr.ndim != 1:
            raise ValueError(f"series must be one-dimensional, got shape {arr.shape}")
        if arr.size == 0:
            raise ValueError("series must contain at least one value")
        if not np.all(np.isfinite(arr)):
            raise ValueError("series values must be finite")
        if int(self.offset) != self.offset or self.offset < 0:
            raise ValueError(f"offset must be a non-negative integer, got {self.offset!r}")
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "offset", int(self.offset))

    def __len__(self) -> int:
        return self.values.size

    def __iter__(self):
        return iter(self.values.tolist())

    def __getitem__(self, item):
        return self.values[item]

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.values.copy() if copy else self.values
        return self.values.astype(dtype)

    def __repr__(self) -> str:
        return f"Series(n={len(self)}, offset={self.offset}, values={self.values!r})"

    def indices(self) -> np.ndarray:
        """Original 0-based index of every value."""
        return np.arange(self.offset, self.offset + len(self))

    def with_values(self, values: ArrayLike, offset: int | None = None) -> "Series":
        return Series(values, self.offset if offset is None else offset)


SeriesLike = Union[Series, ArrayLike]


def as_series(y: SeriesLike) -> Series:
    """Return ``y`` unchanged if it already is a :class:`Series`, else wrap it."""
    if isinstance(y, Series):
        return y
    return Series(y)


def reverse(y: SeriesLike) -> Series:
    """Read the series from right to left.

    The offset is kept as is; the reversal is a helper for right-to-left
    smoothing and its output is reversed back before use.
    """
    y = as_series(y)
    return y.with_values(y.values[::-1])
