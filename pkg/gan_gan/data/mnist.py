"""
MNIST IDX image ingestion.

Only the training images are read; labels and the test split are not used.
Files may be raw or gzip-compressed (detected from the first two bytes).
"""

import gzip
import os
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

import numpy as np

from ..utils.errors import (
    logger, ConfigurationError, IdxMagicError, IdxTruncatedError, IdxDimensionError,
)

# Data format (big endian):
# u32 | Magic 0x00000803
# u32 | Image count
# u32 | Row count
# u32 | Column count
# u8[] | Pixels, row-major
IDX_IMAGE_MAGIC = 0x00000803
IDX_HEADER = struct.Struct(">IIII")
GZIP_MAGIC = b"\x1f\x8b"

MNIST_SIDE = 28
MNIST_PIXELS = MNIST_SIDE * MNIST_SIDE
MNIST_TRAIN_COUNT = 60000
MNIST_TRAIN_FILENAMES = (
    "train-images-idx3-ubyte",
    "train-images-idx3-ubyte.gz",
    "train-images.idx3-ubyte",
)
MNIST_DIR_ENV = "GANGAN_MNIST_DIR"


@dataclass
class MnistDataset:
    """N x 784 float32 images scaled to [-1, 1]."""
    images: np.ndarray

    def __post_init__(self):
        if self.images.ndim != 2 or self.images.shape[1] != MNIST_PIXELS:
            raise IdxDimensionError(f"MNIST images must be (N, {MNIST_PIXELS}), got {self.images.shape}")

    @property
    def count(self) -> int:
        return self.images.shape[0]

    def __len__(self) -> int:
        return self.count

    def subset(self, n: Optional[int]) -> "MnistDataset":
        """The first `n` images (all of them when n is None or too large)."""
        if n is None or n >= self.count:
            return self
        if n < 1:
            raise ConfigurationError(f"Subset size must be positive, got {n}")
        return MnistDataset(self.images[:n])


def read_idx_bytes(path: Union[str, os.PathLike]) -> bytes:
    """Read a file, transparently decompressing gzip."""
    raw = Path(path).read_bytes()
    if raw[:2] == GZIP_MAGIC:
        try:
            raw = gzip.decompress(raw)
        except (OSError, EOFError) as e:
            raise IdxTruncatedError(f"{path}: corrupt gzip stream ({e})") from e
    return raw


def pixels_to_unit_range(pixels: np.ndarray) -> np.ndarray:
    """Map uint8 pixels p to p / 127.5 - 1 as float32."""
    return pixels.astype(np.float32) / np.float32(127.5) - np.float32(1.0)


def load_mnist(images_path: Union[str, os.PathLike], limit: Optional[int] = None) -> MnistDataset:
    """
    Parse an IDX image file into an MnistDataset.

    Args:
        images_path: Path to train-images-idx3-ubyte (optionally .gz)
        limit: Keep only the first `limit` images

    Raises:
        IdxMagicError, IdxTruncatedError, IdxDimensionError
    """
    raw = read_idx_bytes(images_path)
    if len(raw) < IDX_HEADER.size:
        raise IdxTruncatedError(f"{images_path}: {len(raw)} bytes is shorter than the {IDX_HEADER.size}-byte IDX header")

    magic, count, rows, cols = IDX_HEADER.unpack_from(raw, 0)
    if magic != IDX_IMAGE_MAGIC:
        raise IdxMagicError(f"{images_path}: magic 0x{magic:08x} is not an IDX image file (expected 0x{IDX_IMAGE_MAGIC:08x})")
    if rows != MNIST_SIDE or cols != MNIST_SIDE:
        raise IdxDimensionError(f"{images_path}: images are {rows}x{cols}, expected {MNIST_SIDE}x{MNIST_SIDE}")

    expected = IDX_HEADER.size + count * MNIST_PIXELS
    if len(raw) < expected:
        raise IdxTruncatedError(f"{images_path}: header declares {count} images ({expected} bytes) but file has {len(raw)} bytes")

    n = count if limit is None else min(count, limit)
    pixels = np.frombuffer(raw, dtype=np.uint8, count=n * MNIST_PIXELS, offset=IDX_HEADER.size)
    dataset = MnistDataset(pixels_to_unit_range(pixels.reshape(n, MNIST_PIXELS)))
    logger.info(f"Loaded {dataset.count} MNIST images from {images_path}")
    return dataset


def find_mnist_images(directory: Union[str, os.PathLike]) -> Optional[Path]:
    """The first usual MNIST training-images file name present in `directory`."""
    for name in MNIST_TRAIN_FILENAMES:
        candidate = Path(directory) / name
        if candidate.exists():
            return candidate
    return None


def resolve_mnist_path(images_path: Optional[Union[str, os.PathLike]] = None) -> Optional[Path]:
    """
    Resolve the training images file.

    An explicit path wins; otherwise the directory named by GANGAN_MNIST_DIR is searched.
    """
    if images_path:
        return Path(images_path)
    directory = os.environ.get(MNIST_DIR_ENV)
    return find_mnist_images(directory) if directory else None
