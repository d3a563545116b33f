"""
Unit tests for the Adam optimizer.
"""

import numpy as np
import pytest
from pydantic import ValidationError

from gan_gan.optim import AdamConfig, AdamState, adam_step
from gan_gan.utils.errors import NonFiniteGradientError, ShapeError


def _step(theta, grad, state=None, cfg=None):
    state = state or AdamState.for_params([theta])
    return adam_step([theta], [grad], state, cfg or AdamConfig())


class TestAdamConfig:
    def test_defaults(self):
        cfg = AdamConfig()
        assert cfg.lr == 2e-4
        assert cfg.beta1 == 0.9
        assert cfg.beta2 == 0.999
        assert cfg.epsilon == 1e-8

    def test_rejects_bad_values(self):
        with pytest.raises(ValidationError):
            AdamConfig(lr=0)
        with pytest.raises(ValidationError):
            AdamConfig(beta1=1.0)

    def test_frozen(self):
        cfg = AdamConfig()
        with pytest.raises(ValidationError):
            cfg.lr = 1.0


class TestAdamStep:
    def test_first_step_closed_form(self):
        theta = np.zeros(1)
        state = _step(theta, np.ones(1))
        assert state.t == 1
        assert theta[0] == pytest.approx(-2e-4 / (1 + 1e-8), abs=1e-10)

    def test_zero_gradient_leaves_params(self):
        theta = np.array([0.5, -0.25])
        state = _step(theta, np.zeros(2))
        _step(theta, np.zeros(2), state)
        np.testing.assert_array_equal(theta, [0.5, -0.25])

    def test_moves_against_gradient_sign(self):
        theta = np.zeros(3)
        grad = np.array([2.0, -0.1, 5.0])
        state = _step(theta, grad)
        _step(theta, grad, state)
        np.testing.assert_array_equal(np.sign(theta), [-1.0, 1.0, -1.0])

    def test_opposite_gradients_give_opposite_updates(self):
        a, b = np.zeros(4), np.zeros(4)
        grad = np.array([0.3, -1.0, 7.0, 1e-3])
        _step(a, grad)
        _step(b, -grad)
        np.testing.assert_allclose(a, -b)

    def test_minimizes_quadratic(self):
        theta = np.array([1.0, -1.0])
        cfg = AdamConfig(lr=1e-3)
        state = AdamState.for_params([theta])
        for _ in range(2000):
            adam_step([theta], [2 * theta], state, cfg)
        assert np.abs(theta).max() < 0.05

    def test_lazy_state_initialization(self):
        theta = np.zeros(2, dtype=np.float32)
        state = adam_step([theta], [np.ones(2, dtype=np.float32)], AdamState(), AdamConfig())
        assert state.t == 1
        assert state.m[0].dtype == np.float32

    def test_non_finite_gradient_names_network(self):
        theta = np.zeros(2)
        state = AdamState.for_params([theta])
        with pytest.raises(NonFiniteGradientError) as exc_info:
            adam_step([theta], [np.array([np.inf, 0.0])], state, AdamConfig(), network="generator")
        assert exc_info.value.network == "generator"
        assert exc_info.value.exit_code == 3
        assert state.t == 0
        np.testing.assert_array_equal(theta, 0.0)

    def test_shape_mismatch(self):
        theta = np.zeros(2)
        with pytest.raises(ShapeError):
            _step(theta, np.zeros(3))
