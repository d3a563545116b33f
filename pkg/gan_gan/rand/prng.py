"""
Deterministic seeded pseudo-random number generation.

Every random draw in the pipeline (initialization, latent noise, epoch shuffles)
comes from a Prng. The generator is numpy's PCG64 seeded through
numpy.random.SeedSequence, which gives the same stream on every platform for a
given (seed, spawn key). Independent streams are derived by extending the spawn
key: the fleet uses (gan_index,) per GAN and each trainer further splits by purpose.
"""

from typing import List, Sequence, Tuple, TypeVar, Union

import numpy as np

T = TypeVar("T")

# Purpose streams within one training run
STREAM_INIT = 0
STREAM_NOISE = 1
STREAM_SHUFFLE = 2
STREAM_PROBE = 3


class Prng:
    """
    A seeded PCG64 stream identified by (seed, spawn_key).

    Instances are single-writer; give each worker its own child stream.
    """

    def __init__(self, seed: int, spawn_key: Sequence[int] = ()):
        if seed < 0 or seed >= 2 ** 64:
            raise ValueError(f"Seed must be a 64-bit unsigned integer, got {seed}")
        self.seed = int(seed)
        self.spawn_key: Tuple[int, ...] = tuple(int(k) for k in spawn_key)
        sequence = np.random.SeedSequence(entropy=self.seed, spawn_key=self.spawn_key)
        self.generator = np.random.Generator(np.random.PCG64(sequence))

    def child(self, *keys: int) -> "Prng":
        """Derive an independent stream by appending `keys` to this stream's spawn key."""
        return Prng(self.seed, self.spawn_key + tuple(keys))

    def __repr__(self) -> str:
        return f"Prng(seed={self.seed}, spawn_key={self.spawn_key})"


def standard_normal(
    prng: Prng,
    n: Union[int, Tuple[int, ...]],
    dtype: type = np.float64,
) -> np.ndarray:
    """
    Draw i.i.d. N(0, 1) samples with numpy's ziggurat sampler.

    Args:
        prng: Stream to draw from
        n: Number of samples, or an output shape
        dtype: np.float64 or np.float32

    Returns:
        Array of samples with the requested shape
    """
    shape = (n,) if isinstance(n, (int, np.integer)) else tuple(n)
    if any(d < 0 for d in shape):
        raise ValueError(f"Sample count must be non-negative, got {n}")
    return prng.generator.standard_normal(shape, dtype=dtype)


def uniform(prng: Prng, low: float, high: float, shape: Tuple[int, ...]) -> np.ndarray:
    """Draw i.i.d. float64 samples from U[low, high)."""
    return prng.generator.uniform(low, high, size=shape)


def shuffle(prng: Prng, indices: Sequence[T]) -> List[T]:
    """
    Return a uniformly random permutation of `indices` (Fisher-Yates).

    The input is not modified.
    """
    items = list(indices)
    if len(items) < 2:
        return items
    order = prng.generator.permutation(len(items))
    return [items[i] for i in order]


def permutation(prng: Prng, n: int) -> np.ndarray:
    """Return a random permutation of range(n) as an int64 array."""
    return prng.generator.permutation(n)
