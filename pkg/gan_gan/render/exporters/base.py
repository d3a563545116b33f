"""
Base exporter class that all image exporters inherit from.
"""

from abc import ABC, abstractmethod

import numpy as np

from ...utils.errors import ShapeError


class BaseImageExporter(ABC):
    """
    Abstract base class for grayscale image exporters.

    All exporter implementations must inherit from this class and implement
    the `export` method.
    """

    @abstractmethod
    def export(self, image: np.ndarray, output_path: str) -> str:
        """
        Write a (height, width) uint8 image to `output_path`.

        Returns:
            str: The path to the exported file

        Raises:
            ExporterError: If export fails for any reason
        """
        pass

    @classmethod
    def get_format(cls) -> str:
        """
        Format identifier: the lowercase class name without the 'Exporter' suffix.
        """
        name = cls.__name__.lower()
        if name.endswith('exporter'):
            name = name[:-8]
        return name

    @staticmethod
    def check_dependencies() -> bool:
        """True if all dependencies of this exporter are installed."""
        return True

    def get_extension(self) -> str:
        return self.get_format()

    @staticmethod
    def validate_image(image: np.ndarray) -> np.ndarray:
        image = np.asarray(image)
        if image.ndim != 2 or image.dtype != np.uint8 or 0 in image.shape:
            raise ShapeError(f"Expected a non-empty 2-D uint8 image, got shape {image.shape} dtype {image.dtype}")
        return image
