"""
Canonical flattening between structured parameters and parameter vectors.

A parameter vector (ParamVector) is a 1-D float32 array holding, for the
generator and then the discriminator, layers 1..3 in order, each as its weight
matrix row-major by output unit followed by its bias.
"""

from typing import Sequence, Tuple, Union

import numpy as np

from .mlp import Mlp, MlpSpec
from ..utils.errors import ShapeError

PARAM_DTYPE = np.float32


def param_count(specs: Union[MlpSpec, Sequence[MlpSpec]]) -> int:
    """Number of scalars in one network or in a tuple of networks."""
    if isinstance(specs, MlpSpec):
        return specs.param_count
    return sum(spec.param_count for spec in specs)


def flatten_mlp(net: Mlp, dtype: type = PARAM_DTYPE) -> np.ndarray:
    """One network's parameters as a flat vector."""
    return np.concatenate([p.ravel() for p in net.parameters()]).astype(dtype, copy=False)


def unflatten_mlp(vector: np.ndarray, spec: MlpSpec) -> Mlp:
    """Rebuild one network from a flat vector of exactly spec.param_count values."""
    vector = np.asarray(vector)
    if vector.ndim != 1 or vector.size != spec.param_count:
        raise ShapeError(f"Vector of dim {vector.size} does not match {spec.param_count} parameters of {spec.layer_dims}")
    weights, biases = [], []
    offset = 0
    for out, inp in spec.weight_shapes:
        weights.append(vector[offset:offset + out * inp].reshape(out, inp).copy())
        offset += out * inp
        biases.append(vector[offset:offset + out].copy())
        offset += out
    return Mlp(spec, weights, biases)


def flatten(gan: Tuple[Mlp, Mlp], dtype: type = PARAM_DTYPE) -> np.ndarray:
    """Flatten a (generator, discriminator) pair into a ParamVector."""
    generator, discriminator = gan
    return np.concatenate([flatten_mlp(generator, dtype), flatten_mlp(discriminator, dtype)])


def unflatten(vector: np.ndarray, specs: Tuple[MlpSpec, MlpSpec]) -> Tuple[Mlp, Mlp]:
    """Split a ParamVector back into its (generator, discriminator) pair."""
    vector = np.asarray(vector)
    g_spec, d_spec = specs
    expected = param_count(specs)
    if vector.ndim != 1 or vector.size != expected:
        raise ShapeError(f"ParamVector of dim {vector.size} does not match the expected {expected}")
    split = g_spec.param_count
    return unflatten_mlp(vector[:split], g_spec), unflatten_mlp(vector[split:], d_spec)
