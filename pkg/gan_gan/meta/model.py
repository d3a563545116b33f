"""
The GAN-GAN model and its training loop.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np

from .gangan_config import GanGanConfig
from ..data.snapshots import SnapshotStore, StoreArch
from ..data.stats import store_stats
from ..nn import Activation, Mlp, flatten_mlp, init_mlp
from ..rand import Prng, STREAM_INIT, STREAM_NOISE, STREAM_SHUFFLE
from ..training.adversarial import AdversarialPair, adversarial_epoch
from ..training.gan_trainer import EpochStats
from ..utils.errors import ArchitectureMismatchError, NumericalError, SnapshotFormatError

logger = logging.getLogger(__name__)


@dataclass
class GanGanModel:
    """
    A trained GAN-GAN.

    The generator maps latent codes to ParamVectors of GANs with architecture
    `source`; the discriminator scores ParamVectors.
    """
    generator: Mlp
    discriminator: Mlp
    source: StoreArch
    epochs_trained: int = 0
    history: List[EpochStats] = field(default_factory=list)

    def __post_init__(self):
        dim = self.source.param_count
        if self.generator.spec.output_dim != dim or self.discriminator.spec.input_dim != dim:
            raise ArchitectureMismatchError(
                f"GAN-GAN dims (generator out {self.generator.spec.output_dim}, "
                f"discriminator in {self.discriminator.spec.input_dim}) do not match source param_count {dim}"
            )
        if self.generator.spec.output_activation is not Activation.TANH:
            raise ArchitectureMismatchError("GAN-GAN generator must have a tanh output")

    @property
    def latent_dim(self) -> int:
        return self.generator.spec.input_dim

    @property
    def data_dim(self) -> int:
        return self.generator.spec.output_dim

    @property
    def gen_hidden(self) -> int:
        return self.generator.spec.layer_dims[1]

    @property
    def disc_hidden(self) -> int:
        return self.discriminator.spec.layer_dims[1]

    def equals(self, other: "GanGanModel") -> bool:
        """Bitwise equality of architecture, parameters and history."""
        return (
            self.source == other.source
            and self.epochs_trained == other.epochs_trained
            and self.generator.spec == other.generator.spec
            and self.discriminator.spec == other.discriminator.spec
            and flatten_mlp(self.generator).tobytes() == flatten_mlp(other.generator).tobytes()
            and flatten_mlp(self.discriminator).tobytes() == flatten_mlp(other.discriminator).tobytes()
            and [(h.d_loss, h.g_loss) for h in self.history] == [(h.d_loss, h.g_loss) for h in other.history]
        )


def train_gangan(
    config: GanGanConfig,
    store: SnapshotStore,
    on_epoch: Optional[Callable[[EpochStats], None]] = None,
) -> GanGanModel:
    """
    Train a GAN-GAN on the ParamVectors of `store` with the same adversarial
    loop as the fleet GANs.

    Raises:
        SnapshotFormatError: the store is empty
        ArchitectureMismatchError: config.data_dim differs from the store's param_count
        NumericalError: a loss or gradient became non-finite
    """
    if len(store) == 0:
        raise SnapshotFormatError("Cannot train a GAN-GAN on an empty snapshot store")
    if config.data_dim != store.arch.param_count:
        raise ArchitectureMismatchError(
            f"GAN-GAN data_dim {config.data_dim} does not match store param_count {store.arch.param_count}"
        )

    stats = store_stats(store)
    logger.info(
        f"Snapshot store: {stats.count} records, min={stats.min:.4f} max={stats.max:.4f} "
        f"mean_abs={stats.mean_abs:.4f}"
    )
    if stats.saturated_fraction > 0:
        logger.warning(
            f"{stats.saturated_fraction:.6f} of snapshot values have |theta| >= 0.999; "
            "the tanh generator cannot reproduce them exactly"
        )

    root = Prng(config.seed)
    init = root.child(STREAM_INIT)
    pair = AdversarialPair(
        init_mlp(config.generator_spec(), init),
        init_mlp(config.discriminator_spec(), init),
    )
    noise_prng = root.child(STREAM_NOISE)
    shuffle_prng = root.child(STREAM_SHUFFLE)

    history: List[EpochStats] = []
    for epoch in range(1, config.epochs + 1):
        try:
            d_loss, g_loss = adversarial_epoch(
                pair, store.params, config.batch_size, shuffle_prng, noise_prng, config.adam
            )
        except NumericalError as e:
            if e.epoch is None:
                e.epoch = epoch
            raise
        epoch_stats = EpochStats(epoch, d_loss, g_loss)
        history.append(epoch_stats)
        logger.info(f"gangan epoch={epoch} d_loss={d_loss:.4f} g_loss={g_loss:.4f}")
        if on_epoch:
            on_epoch(epoch_stats)

    return GanGanModel(pair.generator, pair.discriminator, store.arch, config.epochs, history)
