"""
Unit tests for mini-batching and snapshot store statistics.
"""

import numpy as np
import pytest

from gan_gan.data import batches, batch_indices, store_stats, StoreArch, SnapshotRecord, SnapshotStore
from gan_gan.rand import Prng
from gan_gan.utils.errors import ShapeError, SnapshotFormatError


class TestBatching:
    def test_partition_keeps_short_batch(self):
        sizes = [len(idx) for idx in batch_indices(10, 4, Prng(0))]
        assert sizes == [4, 4, 2]

    def test_every_row_once(self):
        seen = np.concatenate(list(batch_indices(37, 8, Prng(1))))
        assert sorted(seen.tolist()) == list(range(37))

    def test_order_depends_on_stream(self):
        a = np.concatenate(list(batch_indices(50, 50, Prng(0))))
        b = np.concatenate(list(batch_indices(50, 50, Prng(0))))
        c = np.concatenate(list(batch_indices(50, 50, Prng(1))))
        np.testing.assert_array_equal(a, b)
        assert not np.array_equal(a, c)

    def test_order_changes_between_epochs(self):
        prng = Prng(3)
        first = np.concatenate(list(batch_indices(64, 16, prng)))
        second = np.concatenate(list(batch_indices(64, 16, prng)))
        assert sorted(first.tolist()) == sorted(second.tolist())
        assert not np.array_equal(first, second)

    def test_batches_gather_rows(self):
        data = np.arange(12, dtype=np.float32).reshape(6, 2)
        rows = np.concatenate(list(batches(data, 4, Prng(2))))
        assert sorted(rows[:, 0].tolist()) == [0, 2, 4, 6, 8, 10]
        np.testing.assert_array_equal(rows[:, 1] - rows[:, 0], 1)

    def test_batch_larger_than_data(self):
        assert [len(b) for b in batch_indices(3, 128, Prng(0))] == [3]

    def test_invalid(self):
        with pytest.raises(ShapeError):
            list(batch_indices(0, 4, Prng(0)))
        with pytest.raises(ShapeError):
            list(batch_indices(4, 0, Prng(0)))


class TestStoreStats:
    def _store(self, values):
        arch = StoreArch(2, 3, 4)
        records = [SnapshotRecord(0, e + 1, np.asarray(v, dtype=np.float32)) for e, v in enumerate(values)]
        return SnapshotStore.from_records(arch, records)

    def test_values(self):
        first = np.zeros(68, dtype=np.float32)
        first[0] = -0.5
        second = np.zeros(68, dtype=np.float32)
        second[0] = 1.0
        second[1] = 0.25
        stats = store_stats(self._store([first, second]))
        assert stats.count == 2
        assert stats.min == -0.5
        assert stats.max == 1.0
        assert stats.coord_min[0] == -0.5 and stats.coord_max[0] == 1.0
        assert stats.mean_abs == pytest.approx(1.75 / 136)
        assert stats.saturated_fraction == pytest.approx(1 / 136)

    def test_chunking_is_exact(self, tiny_arch, make_store):
        store = make_store(tiny_arch, gans=5, epochs=7, seed=9)
        whole = store_stats(store, chunk=1000)
        chunked = store_stats(store, chunk=3)
        np.testing.assert_array_equal(whole.coord_min, chunked.coord_min)
        np.testing.assert_array_equal(whole.coord_max, chunked.coord_max)
        assert whole.mean_abs == pytest.approx(chunked.mean_abs, rel=1e-12)

    def test_empty_store(self, tiny_arch):
        with pytest.raises(SnapshotFormatError):
            store_stats(SnapshotStore(tiny_arch))
