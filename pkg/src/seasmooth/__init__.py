"""Symmetrized exponential smoothing and tooth counting for scanned profiles."""
from .errors import (
    ConfigError,
    NoValidWindowError,
    PipelineError,
    SeriesParseError,
    WindowExceedsSeriesError,
)
from .median import median_of, minimal_glide_length, moving_median, threshold_outlier_mask
from .peaks import (
    PeakReport,
    Side,
    SideDecision,
    TrimResult,
    auto_epsilon,
    count_peaks,
    decide_side,
    trim_explicit,
    trim_zero_runs,
)
from .pipeline import PipelineConfig, PipelineResult, SmootherSpec, TrimSpec, run_pipeline
from .series import Series, as_series, reverse
from .smoothing import (
    alpha_from_glide,
    ea,
    ea_closed_form,
    glide_from_alpha,
    ma_centered,
    ma_centered_recursive,
    ma_general,
    rea,
    sea,
)
from .synth import synthetic_scan

__version__ = "0.1.0"
