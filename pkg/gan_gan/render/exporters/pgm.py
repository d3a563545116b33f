"""
Binary PGM (P5) exporter.
"""

import numpy as np

from .base import BaseImageExporter
from .exceptions import ExporterFileError
from ...utils.file_utils import write_bytes_atomic


def encode_pgm(image: np.ndarray) -> bytes:
    """'P5\\n<width> <height>\\n255\\n' followed by the row-major pixel bytes."""
    height, width = image.shape
    return f"P5\n{width} {height}\n255\n".encode("ascii") + np.ascontiguousarray(image).tobytes()


class PgmExporter(BaseImageExporter):
    """Exporter for binary PGM."""

    def export(self, image: np.ndarray, output_path: str) -> str:
        payload = encode_pgm(self.validate_image(image))
        try:
            return write_bytes_atomic(output_path, payload)
        except OSError as e:
            raise ExporterFileError(f"Error writing PGM to {output_path}: {e}") from e


def write_pgm(path: str, image: np.ndarray) -> str:
    """Write `image` to `path` as binary PGM."""
    return PgmExporter().export(image, str(path))
