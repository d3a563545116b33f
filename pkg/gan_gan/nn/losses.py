"""
Binary cross-entropy for the adversarial objective.
"""

from typing import Tuple

import numpy as np

from ..utils.errors import ShapeError

# Predictions are clamped into [EPS, 1 - EPS] before taking logs
BCE_EPS = 1e-7


def bce(predictions: np.ndarray, targets: np.ndarray) -> Tuple[float, np.ndarray]:
    """
    Mean binary cross-entropy and its gradient w.r.t. the predictions.

        loss = -mean[y ln p + (1 - y) ln(1 - p)]
        grad = (p - y) / (p (1 - p) B)

    The loss is accumulated in float64; the gradient has the dtype of `predictions`.

    Args:
        predictions: Probabilities, any shape
        targets: 0/1 labels broadcastable to `predictions`

    Returns:
        (loss, gradient)
    """
    predictions = np.asarray(predictions)
    if predictions.size == 0:
        raise ShapeError("bce() needs a non-empty batch")
    targets = np.broadcast_to(np.asarray(targets, dtype=np.float64), predictions.shape)

    p = np.clip(predictions.astype(np.float64), BCE_EPS, 1.0 - BCE_EPS)
    n = predictions.size
    loss = -float(np.mean(targets * np.log(p) + (1.0 - targets) * np.log1p(-p)))
    grad = (p - targets) / (p * (1.0 - p) * n)
    return loss, grad.astype(predictions.dtype, copy=False)
