"""Exception types shared across the pipeline.

Every failure carries a short machine-readable ``code`` so callers (and
the command line front end) can react without parsing prose.
"""

from __future__ import annotations


class PipelineError(Exception):
    """Base class for all failures raised by this package."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code

    def __str__(self) -> str:
        return f"[{self.code}] {self.args[0]}"


class ValidationError(PipelineError):
    """A record violates one of its structural invariants."""


class ParseError(PipelineError):
    """A JSONL line could not be turned into a valid record."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__("PARSE_ERROR", message)
        self.line = line


class ConfigError(PipelineError):
    """A hyperparameter or run configuration value is out of range."""

    def __init__(self, message: str, code: str = "CONFIG_ERROR"):
        super().__init__(code, message)


class CalibrationError(PipelineError):
    """Calibration cannot proceed (empty or mixed-task input)."""


class TaskMismatchError(PipelineError):
    """A record's task does not match the calibration artifact."""

    def __init__(self, message: str):
        super().__init__("TASK_MISMATCH", message)


class MetricError(PipelineError):
    """A metric is undefined on the given data (empty group, no rates)."""
