"""Tooth-counting pipeline: trim, median pre-filter, smooth, count, decide.

Stage order is fixed. Each stage keeps its output so it can be written out,
and every series carries its original-index offset, so peak positions are
reported against the raw scan.
"""
from __future__ import annotations

import logging
import numbers
import re
from dataclasses import dataclass, field
from typing import Optional

from . import median as _median
from . import smoothing
from .errors import ConfigError, NoValidWindowError, PipelineError, WindowExceedsSeriesError
from .peaks import (
    PeakReport,
    SideDecision,
    TrimResult,
    auto_epsilon,
    check_side_bands,
    count_peaks,
    decide_side,
    trim_explicit,
    trim_zero_runs,
)
from .series import Series, SeriesLike, as_series

logger = logging.getLogger(__name__)

METHODS = ("ma", "ea", "rea", "sea", "median", "none")


@dataclass(frozen=True)
class TrimSpec:
    """How to remove zero runs.

    ``mode`` is one of ``off``, ``auto`` (threshold ``value`` times the
    value range), ``absolute`` (threshold ``value``) or ``explicit`` (cut
    ``prefix`` and ``suffix`` samples).
    """

    mode: str = "auto"
    value: float = 0.01
    prefix: int = 0
    suffix: int = 0

    def __post_init__(self):
        if self.mode not in ("off", "auto", "absolute", "explicit"):
            raise ConfigError(f"unknown trim mode {self.mode!r}")
        if self.mode in ("auto", "absolute") and not self.value >= 0:
            raise ConfigError(f"trim threshold must be non-negative, got {self.value}")
        if self.prefix < 0 or self.suffix < 0:
            raise ConfigError("trim counts must be non-negative")

    @classmethod
    def parse(cls, text: str) -> "TrimSpec":
        """Parse ``off``, ``auto``, ``auto=F``, ``eps=X`` or ``cut=P,S``."""
        text = text.strip()
        try:
            if text in ("off", "auto"):
                return cls(text)
            key, _, arg = text.partition("=")
            if key == "auto":
                return cls("auto", float(arg))
            if key == "eps":
                return cls("absolute", float(arg))
            if key == "cut":
                p, s = re.split(r"[,;:]", arg)
                return cls("explicit", prefix=int(p), suffix=int(s))
        except ValueError as exc:
            raise ConfigError(f"invalid trim spec {text!r}: {exc}") from None
        raise ConfigError(f"invalid trim spec {text!r}; use off|auto|eps=X|cut=P,S")

    def apply(self, y: Series) -> Optional[TrimResult]:
        if self.mode == "off":
            return None
        if self.mode == "explicit":
            return trim_explicit(y, self.prefix, self.suffix)
        eps = auto_epsilon(y, self.value) if self.mode == "auto" else self.value
        return trim_zero_runs(y, eps)


@dataclass(frozen=True)
class SmootherSpec:
    """Smoothing operator and its glide length (or ``alpha`` for EA family).

    For ``ma`` the glide length is the window size; even windows use the
    general moving mean with ``ell = (L - 1) // 2``. For ``median`` it must
    be odd. For ``ea``, ``rea`` and ``sea`` ``alpha = 1 / glide`` unless
    ``alpha`` is given.
    """

    method: str = "sea"
    glide: Optional[int] = 10
    alpha: Optional[float] = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise ConfigError(f"unknown method {self.method!r}; choose from {', '.join(METHODS)}")
        if self.method == "none":
            return
        if self.alpha is not None:
            if self.method not in ("ea", "rea", "sea"):
                raise ConfigError(f"alpha applies only to ea/rea/sea, not {self.method}")
            if not 0.0 <= self.alpha <= 1.0:
                raise ConfigError(f"alpha must lie in [0, 1], got {self.alpha}")
            return
        if self.glide is None or int(self.glide) != self.glide or self.glide < 1:
            raise ConfigError(f"glide length must be an integer >= 1, got {self.glide}")
        if self.method == "median" and self.glide % 2 == 0:
            raise ConfigError(f"median glide length must be odd, got {self.glide}")

    def alpha_value(self) -> float:
        if self.alpha is not None:
            return self.alpha
        return smoothing.alpha_from_glide(self.glide)

    def apply(self, y: SeriesLike) -> Series:
        y = as_series(y)
        if self.method == "none":
            return y
        if self.method == "ma":
            n = self.glide - 1
            return smoothing.ma_general(y, n, n // 2)
        if self.method == "median":
            return _median.moving_median(y, (self.glide - 1) // 2)
        fn = {"ea": smoothing.ea, "rea": smoothing.rea, "sea": smoothing.sea}[self.method]
        return fn(y, self.alpha_value())

    def label(self) -> str:
        if self.method == "none":
            return "none"
        if self.alpha is not None:
            return f"{self.method}(alpha={self.alpha!r})"
        return f"{self.method}(L={self.glide})"


@dataclass(frozen=True)
class PipelineConfig:
    """Stage settings.

    ``median_glide`` is an odd window, ``"auto"`` (detect outliers and use
    the minimal window) or None to skip the median stage.
    """

    trim: TrimSpec = field(default_factory=TrimSpec)
    median_glide: Optional[int | str] = None
    smoother: SmootherSpec = field(default_factory=SmootherSpec)
    prominence: float = 0.0
    expected_coarse: Optional[int] = None
    expected_fine: Optional[int] = None
    tolerance: int = 1

    def __post_init__(self):
        m = self.median_glide
        if m is not None and m != "auto":
            if not isinstance(m, numbers.Integral) or isinstance(m, bool) or m < 1 or m % 2 == 0:
                raise ConfigError(f"median glide length must be an odd integer >= 1, got {m!r}")
        if not self.prominence >= 0:
            raise ConfigError(f"prominence must be non-negative, got {self.prominence}")
        if (self.expected_coarse is None) != (self.expected_fine is None):
            raise ConfigError("give both expected coarse and fine counts, or neither")
        if self.expected_coarse is not None:
            check_side_bands(self.expected_coarse, self.expected_fine, self.tolerance)

    @classmethod
    def all_off(cls) -> "PipelineConfig":
        return cls(trim=TrimSpec("off"), smoother=SmootherSpec("none"))


@dataclass
class PipelineResult:
    stages: dict[str, Series]
    trim: Optional[TrimResult]
    report: PeakReport
    decision: Optional[SideDecision] = None
    median_glide: Optional[int] = None

    @property
    def final(self) -> Series:
        return self.stages["smooth"]


def run_pipeline(y: SeriesLike, cfg: PipelineConfig = PipelineConfig()) -> PipelineResult:
    """Run trim -> median -> smooth -> count (-> side decision).

    Raises
    ------
    PipelineError
        when a stage precondition fails; ``stage`` names the stage.
    """
    y = as_series(y)
    stages = {"input": y}
    trim = None
    try:
        trim = cfg.trim.apply(y)
    except ValueError as exc:
        raise PipelineError("trim", exc) from exc
    if trim is not None:
        if trim.everything_trimmed:
            raise PipelineError("trim", "every sample lies within the zero-run threshold")
        y = trim.trimmed
        logger.debug("trimmed %d leading, %d trailing samples", trim.prefix_len, trim.suffix_len)
    stages["trim"] = y

    glide = cfg.median_glide
    if glide == "auto":
        try:
            glide = _median.minimal_glide_length(_median.threshold_outlier_mask(y))
        except (NoValidWindowError, ValueError) as exc:
            raise PipelineError("median", exc) from exc
        logger.debug("automatic median glide length %d", glide)
    if glide is not None and glide > 1:
        try:
            y = _median.moving_median(y, (glide - 1) // 2)
        except WindowExceedsSeriesError as exc:
            raise PipelineError("median", exc) from exc
    stages["median"] = y

    try:
        y = cfg.smoother.apply(y)
    except (WindowExceedsSeriesError, ValueError) as exc:
        raise PipelineError("smooth", exc) from exc
    stages["smooth"] = y

    report = count_peaks(y, cfg.prominence)
    decision = None
    if cfg.expected_coarse is not None:
        decision = decide_side(report, cfg.expected_coarse, cfg.expected_fine, cfg.tolerance)
    return PipelineResult(stages, trim, report, decision, glide)
