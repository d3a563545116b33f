"""
Summary statistics over a snapshot store.

Used before meta-training to check that snapshot values sit inside the
generator's tanh range.
"""

from dataclasses import dataclass

import numpy as np

from .snapshots import SnapshotStore
from ..utils.errors import SnapshotFormatError

SATURATION_THRESHOLD = 0.999
STATS_CHUNK = 256


@dataclass
class StoreStats:
    count: int
    coord_min: np.ndarray
    coord_max: np.ndarray
    min: float
    max: float
    mean_abs: float
    saturated_fraction: float


def store_stats(store: SnapshotStore, chunk: int = STATS_CHUNK) -> StoreStats:
    """
    Exact per-coordinate min/max, mean |theta| and the fraction of |theta| >= 0.999.

    Rows are processed in chunks so that a full-size store is never copied whole.
    """
    n = len(store)
    if n == 0:
        raise SnapshotFormatError("Cannot compute statistics of an empty store")

    params = store.params
    coord_min = np.full(params.shape[1], np.inf, dtype=np.float32)
    coord_max = np.full(params.shape[1], -np.inf, dtype=np.float32)
    abs_sum = 0.0
    saturated = 0
    for start in range(0, n, chunk):
        block = params[start:start + chunk]
        np.minimum(coord_min, block.min(axis=0), out=coord_min)
        np.maximum(coord_max, block.max(axis=0), out=coord_max)
        magnitude = np.abs(block.astype(np.float64))
        abs_sum += float(magnitude.sum())
        saturated += int(np.count_nonzero(magnitude >= SATURATION_THRESHOLD))

    total = params.size
    return StoreStats(
        count=n,
        coord_min=coord_min,
        coord_max=coord_max,
        min=float(coord_min.min()),
        max=float(coord_max.max()),
        mean_abs=abs_sum / total,
        saturated_fraction=saturated / total,
    )
