"""
The GAN-GAN: a GAN over fleet snapshots, and sampling GANs from it.
"""

from .gangan_config import GanGanConfig, DEFAULT_DATA_DIM
from .model import GanGanModel, train_gangan
from .sampling import (
    SampledGan, sample_params, sample_gan, sweep_points, latent_path, latent_sweep,
    SWEEP_POINTS, SWEEP_RANGE,
)
from .model_io import write_model, read_model, MODEL_MAGIC, MODEL_VERSION

__all__ = [
    "GanGanConfig", "DEFAULT_DATA_DIM",
    "GanGanModel", "train_gangan",
    "SampledGan", "sample_params", "sample_gan", "sweep_points", "latent_path", "latent_sweep",
    "SWEEP_POINTS", "SWEEP_RANGE",
    "write_model", "read_model", "MODEL_MAGIC", "MODEL_VERSION",
]
