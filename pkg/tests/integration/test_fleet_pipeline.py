"""
Integration tests for fleet training at the full MNIST GAN size on synthetic digits.
"""

import numpy as np
import pytest

from gan_gan.data import load_mnist, read_store
from gan_gan.training import GanConfig, run_fleet

pytestmark = pytest.mark.integration

FLEET_CONFIG = GanConfig(epochs=5, batch_size=128, seed=11)


@pytest.fixture
def digits(mnist_file):
    return load_mnist(mnist_file)


class TestFleetPipeline:
    def test_store_layout(self, tmp_path, digits):
        result = run_fleet(3, FLEET_CONFIG, digits, tmp_path / "fleet.ggan")
        store = read_store(result.path)

        assert store.arch.param_count == 113745
        assert len(store) == 15
        assert store.gans() == [0, 1, 2]
        assert store.epochs_for(2) == [1, 2, 3, 4, 5]
        assert store.params.shape == (15, 113745)
        assert np.isfinite(store.params).all()
        assert (tmp_path / "fleet.ggan").stat().st_size == 28 + 15 * (8 + 4 * 113745)

    def test_members_diverge(self, tmp_path, digits):
        store = read_store(run_fleet(2, FLEET_CONFIG, digits, tmp_path / "fleet.ggan").path)
        assert not np.array_equal(store.record(0, 5).params, store.record(1, 5).params)

    def test_snapshots_move_between_epochs(self, tmp_path, digits):
        store = read_store(run_fleet(1, FLEET_CONFIG, digits, tmp_path / "fleet.ggan").path)
        first, last = store.record(0, 1).params, store.record(0, 5).params
        assert np.abs(last - first).max() > 0

    def test_rerun_is_byte_identical(self, tmp_path, digits):
        a = run_fleet(2, FLEET_CONFIG, digits, tmp_path / "a.ggan")
        b = run_fleet(2, FLEET_CONFIG, digits, tmp_path / "b.ggan")
        assert open(a.path, "rb").read() == open(b.path, "rb").read()

    def test_workers_do_not_change_output(self, tmp_path, digits):
        serial = run_fleet(3, FLEET_CONFIG, digits, tmp_path / "serial.ggan", workers=1)
        parallel = run_fleet(3, FLEET_CONFIG, digits, tmp_path / "parallel.ggan", workers=2)
        assert open(serial.path, "rb").read() == open(parallel.path, "rb").read()
        assert [s.d_loss for s in serial.histories[2]] == [s.d_loss for s in parallel.histories[2]]

    def test_parallel_callbacks_in_index_order(self, tmp_path, digits):
        seen = []
        run_fleet(3, GanConfig(epochs=2, seed=11), digits, tmp_path / "f.ggan", workers=2,
                  on_epoch=lambda gan, stats: seen.append((gan, stats.epoch)))
        assert seen == [(0, 1), (0, 2), (1, 1), (1, 2), (2, 1), (2, 2)]
