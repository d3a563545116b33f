"""
Quantization of generator outputs into 28x28 grayscale tiles.
"""

import numpy as np

from ..utils.errors import ShapeError, NonFiniteInputError

TILE_SIDE = 28
TILE_PIXELS = TILE_SIDE * TILE_SIDE


def vector_to_tile(vector: np.ndarray) -> np.ndarray:
    """
    Map 784 floats in [-1, 1] to a 28x28 uint8 tile.

    Values are clamped to [-1, 1], then byte = floor((v + 1) * 127.5 + 0.5),
    i.e. round half away from zero on a non-negative quantity.
    """
    v = np.asarray(vector, dtype=np.float64)
    if v.ndim != 1 or v.size != TILE_PIXELS:
        raise ShapeError(f"Tile vectors must have {TILE_PIXELS} values, got shape {v.shape}")
    if not np.isfinite(v).all():
        raise NonFiniteInputError("Image vector contains NaN or Inf")
    scaled = np.floor((np.clip(v, -1.0, 1.0) + 1.0) * 127.5 + 0.5)
    return scaled.astype(np.uint8).reshape(TILE_SIDE, TILE_SIDE)


def vectors_to_tiles(vectors: np.ndarray) -> list:
    """vector_to_tile over the rows of an (N, 784) array."""
    return [vector_to_tile(row) for row in np.asarray(vectors)]
