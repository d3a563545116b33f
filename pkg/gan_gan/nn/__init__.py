"""
Dense MLP engine: activations, forward/backward, BCE and parameter flattening.
"""

from .activations import Activation, LEAKY_RELU_SLOPE
from .mlp import (
    MlpSpec, Mlp, Tape, Gradients, gan_specs,
    init_mlp, forward, backward, predict,
)
from .losses import bce, BCE_EPS
from .params import param_count, flatten, unflatten, flatten_mlp, unflatten_mlp, PARAM_DTYPE

__all__ = [
    "Activation", "LEAKY_RELU_SLOPE",
    "MlpSpec", "Mlp", "Tape", "Gradients", "gan_specs",
    "init_mlp", "forward", "backward", "predict",
    "bce", "BCE_EPS",
    "param_count", "flatten", "unflatten", "flatten_mlp", "unflatten_mlp", "PARAM_DTYPE",
]
