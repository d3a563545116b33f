"""
Adam with explicit bias correction.

One AdamState per network; the generator and discriminator are stepped
independently.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..utils.errors import ShapeError, NonFiniteGradientError


class AdamConfig(BaseModel):
    """Adam hyperparameters; lr is the fixed GAN rate, the rest are the usual framework defaults."""
    model_config = ConfigDict(frozen=True)

    lr: float = Field(2e-4, gt=0, description="Learning rate")
    beta1: float = Field(0.9, ge=0, lt=1, description="First moment decay")
    beta2: float = Field(0.999, ge=0, lt=1, description="Second moment decay")
    epsilon: float = Field(1e-8, gt=0, description="Denominator stabilizer")


@dataclass
class AdamState:
    """First/second moment accumulators and the step counter."""
    m: List[np.ndarray] = field(default_factory=list)
    v: List[np.ndarray] = field(default_factory=list)
    t: int = 0

    @classmethod
    def for_params(cls, params: Sequence[np.ndarray]) -> "AdamState":
        return cls(
            m=[np.zeros_like(p) for p in params],
            v=[np.zeros_like(p) for p in params],
            t=0,
        )


def adam_step(
    params: Sequence[np.ndarray],
    grads: Sequence[np.ndarray],
    state: AdamState,
    cfg: AdamConfig,
    network: Optional[str] = None,
) -> AdamState:
    """
    Apply one Adam update to `params` in place.

        t <- t + 1
        m <- b1 m + (1 - b1) g
        v <- b2 v + (1 - b2) g^2
        theta <- theta - lr (m / (1 - b1^t)) / (sqrt(v / (1 - b2^t)) + eps)

    Args:
        params: Parameter arrays, updated in place
        grads: Gradients in the same order and shapes
        state: Accumulators, updated in place
        cfg: Hyperparameters
        network: Name used in error messages

    Returns:
        The updated state
    """
    if not state.m:
        fresh = AdamState.for_params(params)
        state.m, state.v = fresh.m, fresh.v
    if not (len(params) == len(grads) == len(state.m) == len(state.v)):
        raise ShapeError(
            f"Adam got {len(params)} params, {len(grads)} grads and {len(state.m)} moment arrays"
        )
    for i, (p, g, m) in enumerate(zip(params, grads, state.m)):
        if p.shape != g.shape or p.shape != m.shape:
            raise ShapeError(f"Adam shape mismatch at array {i}: param {p.shape}, grad {g.shape}, state {m.shape}")
    for g in grads:
        if not np.isfinite(g).all():
            raise NonFiniteGradientError("Non-finite gradient rejected by Adam", network=network)

    state.t += 1
    bias1 = 1.0 - cfg.beta1 ** state.t
    bias2 = 1.0 - cfg.beta2 ** state.t
    for p, g, m, v in zip(params, grads, state.m, state.v):
        m *= cfg.beta1
        m += (1.0 - cfg.beta1) * g
        v *= cfg.beta2
        v += (1.0 - cfg.beta2) * (g * g)
        m_hat = m / bias1
        v_hat = v / bias2
        p -= cfg.lr * m_hat / (np.sqrt(v_hat) + cfg.epsilon)
    return state
