"""
Error handling package for gan-gan.

This package provides components for consistent error handling, logging,
and diagnostic information collection throughout the application.
"""

from .exceptions import (
    GanGanError, ConfigurationError, CliArgumentError, LatentDimensionError,
    DataFormatError, MnistFormatError, IdxMagicError, IdxTruncatedError,
    IdxDimensionError, SnapshotFormatError, ModelFormatError, MissingSnapshotError,
    ShapeError, ArchitectureMismatchError,
    NumericalError, NonFiniteLossError, NonFiniteGradientError, NonFiniteInputError,
    FleetTrainingError,
)
from .diagnostics import DiagnosticCollector, DiagnosticLogger
from .handlers import ErrorHandler, ErrorInformationExtractor
from .setup import setup_logging, logger

__all__ = [
    # Exception classes
    "GanGanError", "ConfigurationError", "CliArgumentError", "LatentDimensionError",
    "DataFormatError", "MnistFormatError", "IdxMagicError", "IdxTruncatedError",
    "IdxDimensionError", "SnapshotFormatError", "ModelFormatError",
    "MissingSnapshotError", "ShapeError", "ArchitectureMismatchError",
    "NumericalError", "NonFiniteLossError",
    "NonFiniteGradientError", "NonFiniteInputError", "FleetTrainingError",

    # Diagnostic tools
    "DiagnosticCollector", "DiagnosticLogger",

    # Error handling
    "ErrorHandler", "ErrorInformationExtractor",

    # Setup
    "setup_logging", "logger",
]
