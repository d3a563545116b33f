"""
PNG exporter, available when matplotlib is installed.
"""

import numpy as np

from .base import BaseImageExporter
from .exceptions import ExporterDependencyError, ExporterFileError
from ...utils.file_utils import atomic_write


class PngExporter(BaseImageExporter):
    """Exporter for PNG via matplotlib."""

    @staticmethod
    def check_dependencies() -> bool:
        try:
            import matplotlib  # noqa: F401
            return True
        except ImportError:
            return False

    def export(self, image: np.ndarray, output_path: str) -> str:
        image = self.validate_image(image)
        try:
            import matplotlib
            matplotlib.use("Agg")
            from matplotlib import image as mpimg
        except ImportError:
            raise ExporterDependencyError(
                "matplotlib is required for PNG export. "
                "Install with: pip install gan-gan[png]"
            )
        try:
            with atomic_write(output_path) as handle:
                mpimg.imsave(handle, image, cmap="gray", vmin=0, vmax=255, format="png")
            return output_path
        except OSError as e:
            raise ExporterFileError(f"Error writing PNG to {output_path}: {e}") from e
