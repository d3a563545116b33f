"""
Fleet training of MNIST GANs (the snapshot-producing phase).
"""

from .gan_config import GanConfig
from .adversarial import (
    AdversarialPair, adversarial_step, adversarial_epoch,
    discriminator_step, generator_step, probe_discriminator, PROBE_SIZE,
)
from .gan_trainer import GanTrainer, EpochStats, train_gan_with_snapshots
from .fleet import FleetResult, run_fleet

__all__ = [
    "GanConfig",
    "AdversarialPair", "adversarial_step", "adversarial_epoch",
    "discriminator_step", "generator_step", "probe_discriminator", "PROBE_SIZE",
    "GanTrainer", "EpochStats", "train_gan_with_snapshots",
    "FleetResult", "run_fleet",
]
