"""
Unit tests for the seeded random streams.
"""

import numpy as np
import pytest

from gan_gan.rand import Prng, standard_normal, uniform, shuffle, permutation, STREAM_NOISE


class TestPrng:
    def test_same_seed_same_stream(self):
        a = standard_normal(Prng(42), 100)
        b = standard_normal(Prng(42), 100)
        np.testing.assert_array_equal(a, b)

    def test_spawn_keys_are_independent(self):
        base = standard_normal(Prng(42), 100)
        child = standard_normal(Prng(42, (0,)), 100)
        sibling = standard_normal(Prng(42, (1,)), 100)
        assert not np.array_equal(base, child)
        assert not np.array_equal(child, sibling)

    def test_child_extends_spawn_key(self):
        parent = Prng(5, (3,))
        child = parent.child(STREAM_NOISE)
        assert child.spawn_key == (3, STREAM_NOISE)
        np.testing.assert_array_equal(
            standard_normal(child, 10), standard_normal(Prng(5, (3, STREAM_NOISE)), 10)
        )

    def test_child_does_not_consume_parent(self):
        a, b = Prng(9), Prng(9)
        a.child(0)
        np.testing.assert_array_equal(uniform(a, 0, 1, (4,)), uniform(b, 0, 1, (4,)))

    @pytest.mark.parametrize("seed", [-1, 2 ** 64])
    def test_seed_range(self, seed):
        with pytest.raises(ValueError):
            Prng(seed)


class TestDraws:
    def test_standard_normal_moments(self):
        samples = standard_normal(Prng(0), 100_000)
        assert abs(samples.mean()) < 0.02
        assert abs(samples.std() - 1.0) < 0.02

    def test_standard_normal_shape_and_dtype(self):
        samples = standard_normal(Prng(0), (3, 4), dtype=np.float32)
        assert samples.shape == (3, 4)
        assert samples.dtype == np.float32

    def test_negative_count(self):
        with pytest.raises(ValueError):
            standard_normal(Prng(0), -1)

    def test_uniform_bounds(self):
        samples = uniform(Prng(1), -0.5, 0.5, (1000,))
        assert samples.min() >= -0.5 and samples.max() < 0.5

    def test_shuffle_is_a_permutation(self):
        items = list(range(50))
        shuffled = shuffle(Prng(3), items)
        assert sorted(shuffled) == items
        assert shuffled != items
        assert items == list(range(50))

    def test_shuffle_short_input(self):
        assert shuffle(Prng(0), []) == []
        assert shuffle(Prng(0), ["x"]) == ["x"]

    def test_permutation(self):
        order = permutation(Prng(4), 10)
        assert sorted(order.tolist()) == list(range(10))
