"""Error taxonomy shared across modules; the CLI maps these to exit codes."""


class SemframeError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class ConfigError(SemframeError):
    """Bad or inconsistent run configuration."""

    exit_code = 2


class DataError(SemframeError):
    """Unreadable or malformed input data (corpora, lexicons)."""

    exit_code = 3


class AnalysisError(SemframeError):
    """An analysis precondition failed (missing node, degenerate graph...)."""

    exit_code = 4
