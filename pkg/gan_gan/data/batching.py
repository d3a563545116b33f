"""
Epoch-wise shuffled mini-batching.
"""

from typing import Iterator

import numpy as np

from ..rand import Prng, permutation
from ..utils.errors import ShapeError


def batch_indices(n: int, batch_size: int, prng: Prng) -> Iterator[np.ndarray]:
    """
    Yield index arrays partitioning a fresh permutation of range(n).

    The final short batch is kept.
    """
    if n < 1:
        raise ShapeError("Cannot batch an empty dataset")
    if batch_size < 1:
        raise ShapeError(f"batch_size must be >= 1, got {batch_size}")
    order = permutation(prng, n)
    for start in range(0, n, batch_size):
        yield order[start:start + batch_size]


def batches(data: np.ndarray, batch_size: int, prng: Prng) -> Iterator[np.ndarray]:
    """One shuffled pass over the rows of `data`."""
    for idx in batch_indices(len(data), batch_size, prng):
        yield data[idx]
