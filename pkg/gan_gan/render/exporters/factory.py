"""
Factory for creating image exporters based on format or file suffix.
"""

from pathlib import Path
from typing import Dict, Type

from .base import BaseImageExporter
from .exceptions import ExporterDependencyError, ExporterFormatError
from ...utils.errors import logger


class ImageExporterFactory:
    """Factory for creating image exporters."""

    _exporters: Dict[str, Type[BaseImageExporter]] = {}
    _initialized = False

    @classmethod
    def _initialize(cls):
        if cls._initialized:
            return

        from . import pgm, png

        for module in (pgm, png):
            for attr_name in dir(module):
                attr = getattr(module, attr_name)
                if (isinstance(attr, type)
                        and issubclass(attr, BaseImageExporter)
                        and attr is not BaseImageExporter):
                    cls._exporters[attr.get_format()] = attr

        cls._initialized = True

    @classmethod
    def register_exporter(cls, exporter_class: Type[BaseImageExporter]):
        cls._initialize()
        cls._exporters[exporter_class.get_format()] = exporter_class

    @classmethod
    def create_exporter(cls, format_name: str) -> BaseImageExporter:
        """
        Create an exporter for `format_name` ('pgm', 'png').

        Raises:
            ExporterFormatError: no exporter for the format
            ExporterDependencyError: the exporter's dependencies are missing
        """
        cls._initialize()
        format_name = format_name.lower().lstrip(".")

        exporter_class = cls._exporters.get(format_name)
        if not exporter_class:
            logger.warning(f"No exporter available for format: {format_name}")
            raise ExporterFormatError(
                f"Unsupported image format '{format_name}' (available: {', '.join(sorted(cls._exporters))})"
            )

        if not exporter_class.check_dependencies():
            raise ExporterDependencyError(f"Missing dependencies for {format_name} export")

        return exporter_class()

    @classmethod
    def for_path(cls, path: str) -> BaseImageExporter:
        """Pick the exporter from the output file suffix."""
        suffix = Path(path).suffix
        if not suffix:
            raise ExporterFormatError(f"Output path {path} has no suffix; use .pgm or .png")
        return cls.create_exporter(suffix)

    @classmethod
    def list_available_formats(cls) -> Dict[str, bool]:
        """Registered formats mapped to whether their dependencies are met."""
        cls._initialize()
        return {fmt: exporter.check_dependencies() for fmt, exporter in cls._exporters.items()}


def export_image(image, path: str) -> str:
    """Write `image` with the exporter matching the suffix of `path`."""
    return ImageExporterFactory.for_path(str(path)).export(image, str(path))
