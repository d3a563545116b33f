"""
The two-step adversarial update shared by the MNIST GANs and the GAN-GAN.

Labels follow D(x) = P(real | x): data is target 1, generator output target 0.
The generator uses the non-saturating objective BCE(D(G(z)), 1).
"""

from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from ..data.batching import batches
from ..nn import Mlp, forward, backward, bce, predict
from ..optim import AdamConfig, AdamState, adam_step
from ..rand import Prng, standard_normal, permutation
from ..utils.errors import NonFiniteInputError, NonFiniteLossError

PROBE_SIZE = 512


@dataclass
class AdversarialPair:
    """A generator/discriminator pair with one Adam state each."""
    generator: Mlp
    discriminator: Mlp
    g_state: AdamState = field(default_factory=AdamState)
    d_state: AdamState = field(default_factory=AdamState)

    @property
    def latent_dim(self) -> int:
        return self.generator.spec.input_dim

    def noise(self, prng: Prng, n: int) -> np.ndarray:
        return standard_normal(prng, (n, self.latent_dim), dtype=self.generator.dtype)


def _check_loss(value: float, network: str) -> float:
    if not np.isfinite(value):
        raise NonFiniteLossError(f"{network.capitalize()} loss is {value}", network=network)
    return value


def _check_samples(fake: np.ndarray) -> np.ndarray:
    if not np.isfinite(fake).all():
        raise NonFiniteInputError("Generator produced non-finite samples", network="generator")
    return fake


def discriminator_step(pair: AdversarialPair, real: np.ndarray, z: np.ndarray, adam: AdamConfig) -> float:
    """Minimize BCE(D(real), 1) + BCE(D(G(z)), 0) over D; G is frozen."""
    fake = _check_samples(predict(pair.generator, z))
    d_real, real_tape = forward(pair.discriminator, real)
    d_fake, fake_tape = forward(pair.discriminator, fake)
    real_loss, real_grad = bce(d_real, 1.0)
    fake_loss, fake_grad = bce(d_fake, 0.0)
    loss = _check_loss(real_loss + fake_loss, "discriminator")

    grads = (
        backward(pair.discriminator, real_tape, real_grad, need_input_grad=False)
        + backward(pair.discriminator, fake_tape, fake_grad, need_input_grad=False)
    )
    adam_step(pair.discriminator.parameters(), grads.arrays(), pair.d_state, adam, network="discriminator")
    return loss


def generator_step(pair: AdversarialPair, z: np.ndarray, adam: AdamConfig) -> float:
    """Minimize BCE(D(G(z)), 1) over G, backpropagating through the frozen D."""
    fake, g_tape = forward(pair.generator, z)
    _check_samples(fake)
    d_fake, d_tape = forward(pair.discriminator, fake)
    loss, grad = bce(d_fake, 1.0)
    _check_loss(loss, "generator")

    through_d = backward(pair.discriminator, d_tape, grad, need_input_grad=True)
    grads = backward(pair.generator, g_tape, through_d.input_grad, need_input_grad=False)
    adam_step(pair.generator.parameters(), grads.arrays(), pair.g_state, adam, network="generator")
    return loss


def adversarial_step(
    pair: AdversarialPair,
    real: np.ndarray,
    noise_prng: Prng,
    adam: AdamConfig,
) -> Tuple[float, float]:
    """
    One discriminator step then one generator step on a batch.

    The generator step draws fresh noise.

    Returns:
        (d_loss, g_loss)
    """
    n = len(real)
    d_loss = discriminator_step(pair, real, pair.noise(noise_prng, n), adam)
    g_loss = generator_step(pair, pair.noise(noise_prng, n), adam)
    return d_loss, g_loss


def adversarial_epoch(
    pair: AdversarialPair,
    data: np.ndarray,
    batch_size: int,
    shuffle_prng: Prng,
    noise_prng: Prng,
    adam: AdamConfig,
) -> Tuple[float, float]:
    """One shuffled pass over `data`; returns the mean (d_loss, g_loss) over batches."""
    d_losses, g_losses = [], []
    for real in batches(data, batch_size, shuffle_prng):
        d_loss, g_loss = adversarial_step(pair, real, noise_prng, adam)
        d_losses.append(d_loss)
        g_losses.append(g_loss)
    return float(np.mean(d_losses)), float(np.mean(g_losses))


def probe_discriminator(
    pair: AdversarialPair,
    data: np.ndarray,
    prng: Prng,
    n: int = PROBE_SIZE,
) -> Tuple[float, float]:
    """
    Mean D(real) and mean D(G(z)) over `n` data rows and `n` noise draws.

    Passing a freshly derived stream each time gives a fixed probe set.
    """
    n = min(n, len(data))
    real = data[permutation(prng, len(data))[:n]]
    fake = predict(pair.generator, pair.noise(prng, n))
    d_real = predict(pair.discriminator, real)
    d_fake = predict(pair.discriminator, fake)
    return float(d_real.mean(dtype=np.float64)), float(d_fake.mean(dtype=np.float64))
