"""
Figure-style grids: latent sweeps of a GAN-GAN and epoch progressions of one GAN.

Every row is one GAN; every column is one fixed noise vector drawn from
`noise_seed`, so the same inputs always render the same bytes.
"""

import logging
from typing import List, Sequence, Tuple

import numpy as np

from .grid import DEFAULT_PADDING, compose_grid
from .tiles import vectors_to_tiles
from ..data.snapshots import SnapshotStore
from ..meta.model import GanGanModel
from ..meta.sampling import SWEEP_POINTS, SWEEP_RANGE, latent_sweep, sample_gan
from ..nn import Mlp, predict, unflatten
from ..rand import Prng, standard_normal

logger = logging.getLogger(__name__)

SWEEP_NOISE_COLS = 40
EPOCH_FIGURE_EPOCHS = (1, 2, 10, 25, 27, 30, 32, 35, 40, 49)
EPOCH_FIGURE_SAMPLES = 16


def fixed_noise(noise_seed: int, n: int, latent_dim: int) -> np.ndarray:
    """The n latent vectors shared by every row of a figure."""
    return standard_normal(Prng(noise_seed), (n, latent_dim), dtype=np.float32)


def _row_tiles(generator: Mlp, noise: np.ndarray) -> List[np.ndarray]:
    return vectors_to_tiles(predict(generator, noise))


def render_rows(generators: Sequence[Mlp], noise: np.ndarray, padding: int = DEFAULT_PADDING) -> np.ndarray:
    """One row per generator, one column per noise vector."""
    tiles: List[np.ndarray] = []
    for generator in generators:
        tiles.extend(_row_tiles(generator, noise))
    return compose_grid(tiles, len(generators), len(noise), padding)


def render_sweep_figure(
    model: GanGanModel,
    n_rows: int = SWEEP_POINTS,
    n_cols: int = SWEEP_NOISE_COLS,
    z_range: Tuple[float, float] = SWEEP_RANGE,
    noise_seed: int = 0,
    padding: int = DEFAULT_PADDING,
) -> np.ndarray:
    """
    Grid of samples from GANs swept across a 1-D GAN-GAN latent space.

    With n_rows == 1 the single row is the GAN at the middle of z_range.
    """
    if n_rows == 1:
        generators = [sample_gan(model, [(z_range[0] + z_range[1]) / 2.0])[0]]
    else:
        generators = [sampled.generator for sampled in latent_sweep(model, n_rows, z_range)]
    noise = fixed_noise(noise_seed, n_cols, model.source.latent_dim)
    logger.info(f"Rendering {n_rows}x{n_cols} sweep over z in [{z_range[0]}, {z_range[1]}]")
    return render_rows(generators, noise, padding)


def render_epoch_figure(
    store: SnapshotStore,
    gan_index: int,
    epochs: Sequence[int] = EPOCH_FIGURE_EPOCHS,
    n_samples: int = EPOCH_FIGURE_SAMPLES,
    noise_seed: int = 0,
    padding: int = DEFAULT_PADDING,
) -> np.ndarray:
    """
    One row per requested epoch of GAN `gan_index`, all rows on the same noise.

    Raises:
        MissingSnapshotError: a requested (gan_index, epoch) is not in the store
    """
    specs = store.arch.specs()
    generators = [unflatten(store.record(gan_index, epoch).params, specs)[0] for epoch in epochs]
    noise = fixed_noise(noise_seed, n_samples, store.arch.latent_dim)
    logger.info(f"Rendering epochs {list(epochs)} of gan {gan_index}")
    return render_rows(generators, noise, padding)


def render_sample_figure(
    model: GanGanModel,
    z: Sequence[float],
    n_samples: int = EPOCH_FIGURE_SAMPLES,
    noise_seed: int = 0,
    padding: int = DEFAULT_PADDING,
) -> np.ndarray:
    """A single row of samples from the GAN at latent code `z` (any latent_dim)."""
    generator, _ = sample_gan(model, z)
    noise = fixed_noise(noise_seed, n_samples, model.source.latent_dim)
    return render_rows([generator], noise, padding)
