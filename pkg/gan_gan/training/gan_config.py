"""
Configuration of one MNIST GAN in the fleet.
"""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..data.snapshots import StoreArch
from ..nn import MlpSpec, gan_specs
from ..optim import AdamConfig


class GanConfig(BaseModel):
    """Hyperparameters of a fleet GAN; defaults are the full-size MNIST run."""
    model_config = ConfigDict(frozen=True)

    latent_dim: int = Field(64, gt=0, description="Generator latent dimension")
    hidden_dim: int = Field(64, gt=0, description="Hidden width of both networks")
    data_dim: int = Field(784, gt=0, description="Image vector dimension")
    epochs: int = Field(100, gt=0, description="Epochs per GAN")
    batch_size: int = Field(128, gt=0, description="Mini-batch size")
    adam: AdamConfig = Field(default_factory=AdamConfig)
    seed: int = Field(0, ge=0, lt=2 ** 64, description="Base seed of the fleet")

    def specs(self) -> Tuple[MlpSpec, MlpSpec]:
        return gan_specs(self.latent_dim, self.hidden_dim, self.data_dim)

    def arch(self) -> StoreArch:
        return StoreArch(self.latent_dim, self.hidden_dim, self.data_dim)
