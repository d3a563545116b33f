"""
Dense MLP forward/backward engine.

The engine covers the fixed family used for every network in the pipeline:
three affine layers, LeakyReLU(0.2) after the first two, and a tanh or sigmoid
output. Weights are stored as (out, in) matrices so that a row holds one output
unit, which is also the order they take in a flattened parameter vector.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from . import activations
from .activations import Activation
from ..rand import Prng, uniform
from ..utils.errors import ShapeError, NonFiniteInputError

MLP_DEPTH = 3


@dataclass(frozen=True)
class MlpSpec:
    """
    Architecture descriptor: layer widths [d0, d1, d2, d3] and activations.
    """
    layer_dims: Tuple[int, ...]
    output_activation: Activation
    hidden_activation: Activation = Activation.LEAKY_RELU

    def __post_init__(self):
        dims = tuple(int(d) for d in self.layer_dims)
        object.__setattr__(self, "layer_dims", dims)
        object.__setattr__(self, "output_activation", Activation(self.output_activation))
        object.__setattr__(self, "hidden_activation", Activation(self.hidden_activation))
        if len(dims) != MLP_DEPTH + 1:
            raise ShapeError(f"MlpSpec needs {MLP_DEPTH + 1} layer dims, got {len(dims)}: {dims}")
        if any(d < 1 for d in dims):
            raise ShapeError(f"All layer dims must be >= 1, got {dims}")

    @classmethod
    def generator(cls, latent_dim: int, hidden_dim: int, data_dim: int) -> "MlpSpec":
        """latent -> hidden -> hidden -> data, tanh output."""
        return cls((latent_dim, hidden_dim, hidden_dim, data_dim), Activation.TANH)

    @classmethod
    def discriminator(cls, data_dim: int, hidden_dim: int) -> "MlpSpec":
        """data -> hidden -> hidden -> 1, sigmoid output."""
        return cls((data_dim, hidden_dim, hidden_dim, 1), Activation.SIGMOID)

    @property
    def input_dim(self) -> int:
        return self.layer_dims[0]

    @property
    def output_dim(self) -> int:
        return self.layer_dims[-1]

    @property
    def weight_shapes(self) -> List[Tuple[int, int]]:
        return [(self.layer_dims[i + 1], self.layer_dims[i]) for i in range(MLP_DEPTH)]

    @property
    def param_count(self) -> int:
        return sum(out * inp + out for out, inp in self.weight_shapes)

    def activation_of(self, layer: int) -> Activation:
        return self.output_activation if layer == MLP_DEPTH - 1 else self.hidden_activation


def gan_specs(latent_dim: int = 64, hidden_dim: int = 64, data_dim: int = 784) -> Tuple[MlpSpec, MlpSpec]:
    """(generator, discriminator) specs of one GAN; defaults are the MNIST GAN."""
    return (
        MlpSpec.generator(latent_dim, hidden_dim, data_dim),
        MlpSpec.discriminator(data_dim, hidden_dim),
    )


@dataclass
class Mlp:
    """A parameter set conforming to an MlpSpec."""
    spec: MlpSpec
    weights: List[np.ndarray]
    biases: List[np.ndarray]

    def __post_init__(self):
        if len(self.weights) != MLP_DEPTH or len(self.biases) != MLP_DEPTH:
            raise ShapeError(f"Expected {MLP_DEPTH} layers, got {len(self.weights)} weights and {len(self.biases)} biases")
        for i, (out, inp) in enumerate(self.spec.weight_shapes):
            if self.weights[i].shape != (out, inp):
                raise ShapeError(f"Layer {i + 1} weight shape {self.weights[i].shape} != {(out, inp)}")
            if self.biases[i].shape != (out,):
                raise ShapeError(f"Layer {i + 1} bias shape {self.biases[i].shape} != {(out,)}")

    @classmethod
    def zeros(cls, spec: MlpSpec, dtype: type = np.float32) -> "Mlp":
        return cls(
            spec,
            [np.zeros(shape, dtype=dtype) for shape in spec.weight_shapes],
            [np.zeros(shape[0], dtype=dtype) for shape in spec.weight_shapes],
        )

    @property
    def dtype(self) -> np.dtype:
        return self.weights[0].dtype

    def parameters(self) -> List[np.ndarray]:
        """Parameter arrays in canonical order: W1, b1, W2, b2, W3, b3."""
        params: List[np.ndarray] = []
        for w, b in zip(self.weights, self.biases):
            params.extend((w, b))
        return params

    def astype(self, dtype: type) -> "Mlp":
        return Mlp(self.spec, [w.astype(dtype) for w in self.weights], [b.astype(dtype) for b in self.biases])

    def copy(self) -> "Mlp":
        return self.astype(self.dtype)

    def is_finite(self) -> bool:
        return all(np.isfinite(p).all() for p in self.parameters())


@dataclass
class Tape:
    """Activations cached by forward() for the matching backward() call."""
    inputs: List[np.ndarray] = field(default_factory=list)
    pre_activations: List[np.ndarray] = field(default_factory=list)
    output: Optional[np.ndarray] = None


@dataclass
class Gradients:
    """Gradients shaped like an Mlp's layers, plus the gradient w.r.t. the network input."""
    weights: List[np.ndarray]
    biases: List[np.ndarray]
    input_grad: Optional[np.ndarray] = None

    def arrays(self) -> List[np.ndarray]:
        """Gradient arrays in the same order as Mlp.parameters()."""
        grads: List[np.ndarray] = []
        for w, b in zip(self.weights, self.biases):
            grads.extend((w, b))
        return grads

    def __add__(self, other: "Gradients") -> "Gradients":
        return Gradients(
            [a + b for a, b in zip(self.weights, other.weights)],
            [a + b for a, b in zip(self.biases, other.biases)],
            None,
        )

    def is_finite(self) -> bool:
        return all(np.isfinite(g).all() for g in self.arrays())


def init_mlp(spec: MlpSpec, prng: Prng, dtype: type = np.float32) -> Mlp:
    """
    Draw weights and biases i.i.d. from U(-1/sqrt(fan_in), 1/sqrt(fan_in)).

    Layers are drawn in order, weight matrix before bias.
    """
    weights, biases = [], []
    for out, inp in spec.weight_shapes:
        bound = 1.0 / np.sqrt(inp)
        weights.append(uniform(prng, -bound, bound, (out, inp)).astype(dtype))
        biases.append(uniform(prng, -bound, bound, (out,)).astype(dtype))
    return Mlp(spec, weights, biases)


def forward(net: Mlp, batch: np.ndarray, check_finite: bool = True) -> Tuple[np.ndarray, Tape]:
    """
    Run a batch (B x d0) through the network.

    Returns:
        The output (B x dL) and the tape needed by backward()
    """
    batch = np.asarray(batch)
    if batch.ndim != 2 or batch.shape[1] != net.spec.input_dim:
        raise ShapeError(f"Expected a batch of shape (B, {net.spec.input_dim}), got {batch.shape}")
    if check_finite and not np.isfinite(batch).all():
        raise NonFiniteInputError("Forward pass received non-finite inputs")

    tape = Tape()
    h = batch.astype(net.dtype, copy=False)
    for i, (w, b) in enumerate(zip(net.weights, net.biases)):
        tape.inputs.append(h)
        z = h @ w.T + b
        tape.pre_activations.append(z)
        h = activations.apply(net.spec.activation_of(i), z)
    tape.output = h
    return h, tape


def backward(
    net: Mlp,
    tape: Tape,
    upstream_grad: np.ndarray,
    need_input_grad: bool = True,
) -> Gradients:
    """
    Reverse-mode gradients of the network given dLoss/dOutput.

    Batch reduction is the caller's: the upstream gradient already carries the
    loss's 1/B factor, and parameter gradients are sums over the batch rows.
    """
    if tape.output is None or len(tape.inputs) != MLP_DEPTH:
        raise ShapeError("Tape was not produced by a forward pass of this network")
    upstream_grad = np.asarray(upstream_grad, dtype=net.dtype)
    if upstream_grad.shape != tape.output.shape:
        raise ShapeError(f"Upstream gradient shape {upstream_grad.shape} != output shape {tape.output.shape}")

    weights: List[np.ndarray] = [None] * MLP_DEPTH  # type: ignore[list-item]
    biases: List[np.ndarray] = [None] * MLP_DEPTH  # type: ignore[list-item]
    input_grad = None

    last = MLP_DEPTH - 1
    g = upstream_grad * activations.derivative(
        net.spec.activation_of(last), tape.pre_activations[last], tape.output
    )
    for i in range(last, -1, -1):
        weights[i] = g.T @ tape.inputs[i]
        biases[i] = g.sum(axis=0)
        if i == 0:
            if need_input_grad:
                input_grad = g @ net.weights[0]
            break
        grad_in = g @ net.weights[i]
        z_prev = tape.pre_activations[i - 1]
        g = grad_in * activations.derivative(net.spec.activation_of(i - 1), z_prev, tape.inputs[i])

    return Gradients(weights, biases, input_grad)


def predict(net: Mlp, batch: np.ndarray) -> np.ndarray:
    """forward() without keeping the tape."""
    output, _ = forward(net, batch)
    return output
