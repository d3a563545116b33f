"""
MNIST ingestion and the snapshot store that links fleet training to meta-training.
"""

from .mnist import MnistDataset, load_mnist, resolve_mnist_path, find_mnist_images, MNIST_PIXELS, MNIST_SIDE
from .snapshots import (
    StoreArch, SnapshotRecord, SnapshotStore, SnapshotSink, SnapshotBuffer, SnapshotWriter,
    write_store, read_store,
)
from .batching import batches, batch_indices
from .stats import StoreStats, store_stats, SATURATION_THRESHOLD

__all__ = [
    "MnistDataset", "load_mnist", "resolve_mnist_path", "find_mnist_images", "MNIST_PIXELS", "MNIST_SIDE",
    "StoreArch", "SnapshotRecord", "SnapshotStore", "SnapshotSink", "SnapshotBuffer", "SnapshotWriter",
    "write_store", "read_store",
    "batches", "batch_indices",
    "StoreStats", "store_stats", "SATURATION_THRESHOLD",
]
