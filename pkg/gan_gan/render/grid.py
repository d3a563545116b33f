"""
Grid composition of tiles into a single grayscale image.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .tiles import TILE_SIDE
from ..utils.errors import ShapeError

DEFAULT_PADDING = 2
PADDING_FILL = 0


def grid_size(rows: int, cols: int, padding: int = DEFAULT_PADDING) -> Tuple[int, int]:
    """(width, height) in pixels of a rows x cols grid."""
    return (
        cols * TILE_SIDE + (cols + 1) * padding,
        rows * TILE_SIDE + (rows + 1) * padding,
    )


@dataclass
class ImageGrid:
    """rows x cols tiles in row-major order, separated by `padding` black pixels."""
    rows: int
    cols: int
    tiles: List[np.ndarray]
    padding: int = DEFAULT_PADDING

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ShapeError(f"Grid needs rows, cols >= 1, got {self.rows}x{self.cols}")
        if self.padding < 0:
            raise ShapeError(f"Padding must be >= 0, got {self.padding}")
        if len(self.tiles) != self.rows * self.cols:
            raise ShapeError(
                f"Grid {self.rows}x{self.cols} needs {self.rows * self.cols} tiles, got {len(self.tiles)}"
            )
        for i, tile in enumerate(self.tiles):
            if tile.shape != (TILE_SIDE, TILE_SIDE) or tile.dtype != np.uint8:
                raise ShapeError(f"Tile {i} must be a {TILE_SIDE}x{TILE_SIDE} uint8 array, got {tile.shape} {tile.dtype}")

    @property
    def width(self) -> int:
        return grid_size(self.rows, self.cols, self.padding)[0]

    @property
    def height(self) -> int:
        return grid_size(self.rows, self.cols, self.padding)[1]

    def compose(self) -> np.ndarray:
        """The grid as a (height, width) uint8 image."""
        image = np.full((self.height, self.width), PADDING_FILL, dtype=np.uint8)
        step = TILE_SIDE + self.padding
        for i, tile in enumerate(self.tiles):
            row, col = divmod(i, self.cols)
            top = self.padding + row * step
            left = self.padding + col * step
            image[top:top + TILE_SIDE, left:left + TILE_SIDE] = tile
        return image


def compose_grid(
    tiles: Sequence[np.ndarray],
    rows: int,
    cols: int,
    padding: int = DEFAULT_PADDING,
) -> np.ndarray:
    """Compose `tiles` (row-major) into one image; see ImageGrid."""
    return ImageGrid(rows, cols, list(tiles), padding).compose()
