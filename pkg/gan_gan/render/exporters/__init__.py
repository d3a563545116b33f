"""
Image exporters: binary PGM (always) and PNG (with matplotlib).
"""

from .base import BaseImageExporter
from .pgm import PgmExporter, encode_pgm, write_pgm
from .png import PngExporter
from .factory import ImageExporterFactory, export_image
from .exceptions import ExporterError, ExporterDependencyError, ExporterFileError, ExporterFormatError

__all__ = [
    'BaseImageExporter',
    'PgmExporter', 'encode_pgm', 'write_pgm',
    'PngExporter',
    'ImageExporterFactory', 'export_image',
    'ExporterError', 'ExporterDependencyError', 'ExporterFileError', 'ExporterFormatError',
]
