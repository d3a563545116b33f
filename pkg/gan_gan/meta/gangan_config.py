"""
Configuration of the GAN-GAN, the GAN trained over fleet snapshots.
"""

from pydantic import BaseModel, ConfigDict, Field

from ..nn import MlpSpec
from ..optim import AdamConfig

# Dimension of the default MNIST GAN's ParamVector
DEFAULT_DATA_DIM = 113745


class GanGanConfig(BaseModel):
    """GAN-GAN hyperparameters. data_dim is taken from the snapshot store header."""
    model_config = ConfigDict(frozen=True)

    latent_dim: int = Field(1, gt=0, description="Latent dimension (1 enables sweeps)")
    gen_hidden: int = Field(64, gt=0, description="Generator hidden width")
    disc_hidden: int = Field(8, gt=0, description="Discriminator hidden width")
    data_dim: int = Field(DEFAULT_DATA_DIM, gt=0, description="ParamVector dimension")
    epochs: int = Field(250, gt=0, description="Training epochs")
    batch_size: int = Field(32, gt=0, description="Mini-batch size")
    adam: AdamConfig = Field(default_factory=AdamConfig)
    seed: int = Field(0, ge=0, lt=2 ** 64)

    def generator_spec(self) -> MlpSpec:
        return MlpSpec.generator(self.latent_dim, self.gen_hidden, self.data_dim)

    def discriminator_spec(self) -> MlpSpec:
        return MlpSpec.discriminator(self.data_dim, self.disc_hidden)
