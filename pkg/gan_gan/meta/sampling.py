"""
Sampling concrete MNIST GANs from a GAN-GAN's latent space.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .model import GanGanModel
from ..nn import Mlp, predict, unflatten
from ..utils.errors import ConfigurationError, LatentDimensionError

SWEEP_POINTS = 32
SWEEP_RANGE = (-2.0, 2.0)


@dataclass
class SampledGan:
    """A GAN decoded from latent code `z`."""
    z: np.ndarray
    generator: Mlp
    discriminator: Mlp


def _latent(model: GanGanModel, z: Sequence[float]) -> np.ndarray:
    vector = np.asarray(z, dtype=np.float64)
    if vector.ndim == 0:
        vector = vector.reshape(1)
    if vector.ndim != 1 or vector.size != model.latent_dim:
        raise LatentDimensionError(
            f"Latent vector has {vector.size} components, model latent_dim is {model.latent_dim}"
        )
    return vector


def sample_params(model: GanGanModel, z: Sequence[float]) -> np.ndarray:
    """The ParamVector the GAN-GAN generator emits for latent code `z`."""
    latent = _latent(model, z)
    return predict(model.generator, latent[None, :])[0]


def sample_gan(model: GanGanModel, z: Sequence[float]) -> Tuple[Mlp, Mlp]:
    """
    Decode latent code `z` into a (generator, discriminator) MNIST GAN.

    Raises:
        LatentDimensionError: len(z) != model.latent_dim
    """
    return unflatten(sample_params(model, z), model.source.specs())


def sweep_points(n_points: int, z_min: float, z_max: float) -> np.ndarray:
    """n_points evenly spaced values with both endpoints included."""
    if n_points < 2:
        raise ConfigurationError(f"A sweep needs at least 2 points, got {n_points}")
    k = np.arange(n_points, dtype=np.float64)
    return z_min + (z_max - z_min) * k / (n_points - 1)


def latent_path(
    model: GanGanModel,
    z_start: Sequence[float],
    z_end: Sequence[float],
    n_points: int,
) -> List[SampledGan]:
    """GANs sampled at n_points evenly spaced codes on the segment z_start -> z_end."""
    start, end = _latent(model, z_start), _latent(model, z_end)
    samples = []
    for t in sweep_points(n_points, 0.0, 1.0):
        z = start + (end - start) * t
        generator, discriminator = sample_gan(model, z)
        samples.append(SampledGan(z, generator, discriminator))
    return samples


def latent_sweep(
    model: GanGanModel,
    n_points: int = SWEEP_POINTS,
    z_range: Tuple[float, float] = SWEEP_RANGE,
) -> List[SampledGan]:
    """
    Sample n_points GANs at z_k = z_min + (z_max - z_min) k / (n_points - 1).

    Only defined for 1-D latent spaces; use latent_path otherwise.
    """
    if model.latent_dim != 1:
        raise LatentDimensionError(
            f"latent_sweep needs a 1-D latent space, model has latent_dim={model.latent_dim}"
        )
    z_min, z_max = z_range
    samples = []
    for z in sweep_points(n_points, z_min, z_max):
        generator, discriminator = sample_gan(model, [z])
        samples.append(SampledGan(np.array([z]), generator, discriminator))
    return samples
