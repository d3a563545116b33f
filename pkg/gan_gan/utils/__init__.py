"""
Utility modules for gan-gan: run configuration, atomic file output and error handling.
"""

from .errors import (
    GanGanError, ConfigurationError, CliArgumentError, DataFormatError, NumericalError,
    ErrorHandler, DiagnosticLogger, setup_logging,
)
from .file_utils import atomic_write, write_bytes_atomic, ensure_writable_parent

__all__ = [
    # Error handling
    "GanGanError", "ConfigurationError", "CliArgumentError", "DataFormatError", "NumericalError",
    "ErrorHandler", "DiagnosticLogger", "setup_logging",
    # Files
    "atomic_write", "write_bytes_atomic", "ensure_writable_parent",
]
