"""
Elementwise activations and their derivatives.
"""

from enum import Enum

import numpy as np

LEAKY_RELU_SLOPE = 0.2


class Activation(str, Enum):
    """Activations supported by the dense engine."""
    LEAKY_RELU = "leaky_relu"
    TANH = "tanh"
    SIGMOID = "sigmoid"


def leaky_relu(z: np.ndarray, slope: float = LEAKY_RELU_SLOPE) -> np.ndarray:
    return np.where(z >= 0, z, z * z.dtype.type(slope))


def sigmoid(z: np.ndarray) -> np.ndarray:
    # exp(-|z|) <= 1 on both branches; z < 0 keeps tiny probabilities nonzero
    one = z.dtype.type(1.0)
    e = np.exp(-np.abs(z))
    return np.where(z >= 0, one / (one + e), e / (one + e))


def apply(activation: Activation, z: np.ndarray) -> np.ndarray:
    """Apply `activation` to pre-activations `z`."""
    if activation is Activation.LEAKY_RELU:
        return leaky_relu(z)
    if activation is Activation.TANH:
        return np.tanh(z)
    if activation is Activation.SIGMOID:
        return sigmoid(z)
    raise ValueError(f"Unknown activation: {activation}")


def derivative(activation: Activation, z: np.ndarray, y: np.ndarray) -> np.ndarray:
    """
    d activation(z) / dz, given both the pre-activation `z` and the output `y`.
    """
    one = z.dtype.type(1.0)
    if activation is Activation.LEAKY_RELU:
        return np.where(z >= 0, one, z.dtype.type(LEAKY_RELU_SLOPE))
    if activation is Activation.TANH:
        return one - y * y
    if activation is Activation.SIGMOID:
        # sigma(z) sigma(-z); 1 - y is exactly 0 once y rounds to 1
        return y * sigmoid(-z)
    raise ValueError(f"Unknown activation: {activation}")
