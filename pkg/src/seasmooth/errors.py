"""Exception types shared across the package."""


class WindowExceedsSeriesError(ValueError):
    """A sliding window is longer than the series it is applied to."""


class NoValidWindowError(ValueError):
    """No odd median window satisfies the outlier-count rule."""


class SeriesParseError(ValueError):
    """Input text could not be parsed into a series."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class ConfigError(ValueError):
    """Invalid pipeline or command-line configuration."""


class PipelineError(RuntimeError):
    """A pipeline stage failed its precondition.

    The failing stage name is kept in ``stage`` and the underlying
    exception in ``__cause__``.
    """

    def __init__(self, stage, cause):
        self.stage = stage
        super().__init__(f"stage '{stage}' failed: {cause}")
