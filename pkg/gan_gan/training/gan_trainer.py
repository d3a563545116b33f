"""
Training of one MNIST GAN, emitting a parameter snapshot after every epoch.
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple, Union

import numpy as np

from .adversarial import AdversarialPair, adversarial_step, adversarial_epoch, probe_discriminator, PROBE_SIZE
from .gan_config import GanConfig
from ..data.mnist import MnistDataset
from ..data.snapshots import SnapshotRecord, SnapshotSink
from ..nn import Mlp, flatten, init_mlp
from ..rand import Prng, STREAM_INIT, STREAM_NOISE, STREAM_SHUFFLE, STREAM_PROBE
from ..utils.errors import NumericalError

logger = logging.getLogger(__name__)

EpochCallback = Callable[[int, "EpochStats"], None]


@dataclass
class EpochStats:
    """Mean batch losses of one epoch and the end-of-epoch discriminator probe."""
    epoch: int
    d_loss: float
    g_loss: float
    d_real: Optional[float] = None
    d_fake: Optional[float] = None

    def progress_line(self, gan_index: Optional[int] = None) -> str:
        """Machine-parsable key=value summary; the gan field is omitted for the GAN-GAN."""
        prefix = f"gan={gan_index} " if gan_index is not None else ""
        return f"{prefix}epoch={self.epoch} d_loss={self.d_loss:.4f} g_loss={self.g_loss:.4f}"


def as_images(dataset: Union[MnistDataset, np.ndarray]) -> np.ndarray:
    return dataset.images if isinstance(dataset, MnistDataset) else np.asarray(dataset)


class GanTrainer:
    """
    One GAN of the fleet.

    All randomness comes from the stream (seed, gan_index), split into
    initialization, noise, shuffling and probe sub-streams.
    """

    def __init__(self, config: GanConfig, gan_index: int = 0, probe_size: int = PROBE_SIZE):
        self.config = config
        self.gan_index = gan_index
        self.probe_size = probe_size
        self.stream = Prng(config.seed, (gan_index,))

        g_spec, d_spec = config.specs()
        init = self.stream.child(STREAM_INIT)
        self.pair = AdversarialPair(init_mlp(g_spec, init), init_mlp(d_spec, init))
        self.noise_prng = self.stream.child(STREAM_NOISE)
        self.shuffle_prng = self.stream.child(STREAM_SHUFFLE)

        self.epoch = 0
        self.history: List[EpochStats] = []

    @property
    def generator(self) -> Mlp:
        return self.pair.generator

    @property
    def discriminator(self) -> Mlp:
        return self.pair.discriminator

    def snapshot(self) -> np.ndarray:
        """The current (generator, discriminator) ParamVector."""
        return flatten((self.generator, self.discriminator))

    def train_batch(self, real_batch: np.ndarray, prng: Optional[Prng] = None) -> Tuple[float, float]:
        """One discriminator step and one generator step; returns (d_loss, g_loss)."""
        return adversarial_step(self.pair, real_batch, prng or self.noise_prng, self.config.adam)

    def probe(self, images: np.ndarray) -> Tuple[float, float]:
        """Mean D(real), mean D(G(z)) on the same fixed probe set every call."""
        return probe_discriminator(self.pair, images, self.stream.child(STREAM_PROBE), self.probe_size)

    def train_epoch(self, dataset: Union[MnistDataset, np.ndarray]) -> EpochStats:
        images = as_images(dataset)
        epoch = self.epoch + 1
        try:
            d_loss, g_loss = adversarial_epoch(
                self.pair, images, self.config.batch_size,
                self.shuffle_prng, self.noise_prng, self.config.adam,
            )
        except NumericalError as e:
            if e.epoch is None:
                e.epoch = epoch
            if e.gan_index is None:
                e.gan_index = self.gan_index
            raise

        self.epoch = epoch
        d_real, d_fake = self.probe(images) if self.probe_size else (None, None)
        stats = EpochStats(epoch, d_loss, g_loss, d_real, d_fake)
        self.history.append(stats)
        logger.info(
            f"gan={self.gan_index} epoch={epoch} d_loss={d_loss:.4f} g_loss={g_loss:.4f}"
            + (f" d_real={d_real:.4f} d_fake={d_fake:.4f}" if d_real is not None else "")
        )
        return stats


def train_gan_with_snapshots(
    config: GanConfig,
    dataset: Union[MnistDataset, np.ndarray],
    store_sink: SnapshotSink,
    gan_index: int = 0,
    on_epoch: Optional[EpochCallback] = None,
) -> List[EpochStats]:
    """
    Train one GAN for config.epochs epochs, appending a SnapshotRecord to
    `store_sink` after each epoch.

    Args:
        config: GAN hyperparameters
        dataset: Training images, N x 784 in [-1, 1]
        store_sink: Receives exactly config.epochs records
        gan_index: Fleet index; selects the random stream
        on_epoch: Called with (gan_index, stats) after each snapshot

    Returns:
        The per-epoch loss history
    """
    images = as_images(dataset)
    trainer = GanTrainer(config, gan_index)
    for _ in range(config.epochs):
        stats = trainer.train_epoch(images)
        store_sink.append(SnapshotRecord(gan_index, stats.epoch, trainer.snapshot()))
        if on_epoch:
            on_epoch(gan_index, stats)
    return trainer.history
