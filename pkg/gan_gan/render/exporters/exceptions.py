"""
Exception classes for the image exporters package.
"""

from ...utils.errors import DataFormatError, ConfigurationError


class ExporterError(DataFormatError):
    """Base class for all exporter-related exceptions."""
    pass


class ExporterDependencyError(ExporterError):
    """Raised when a required dependency is missing."""
    pass


class ExporterFileError(ExporterError):
    """Raised when there is an error writing the image file."""
    pass


class ExporterFormatError(ConfigurationError):
    """Raised when no exporter handles the requested output format."""
    pass
