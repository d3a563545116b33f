"""
Unit tests for the GGAN snapshot store.
"""

import struct

import numpy as np
import pytest

from gan_gan.data import (
    StoreArch, SnapshotRecord, SnapshotStore, SnapshotBuffer, SnapshotWriter, write_store, read_store,
)
from gan_gan.data.snapshots import STORE_HEADER
from gan_gan.utils.errors import SnapshotFormatError, MissingSnapshotError, ShapeError


class TestStoreArch:
    def test_default_is_mnist_gan(self):
        assert StoreArch().param_count == 113745

    def test_tiny_arch(self, tiny_arch):
        # G: 2*3+3 + 3*3+3 + 3*4+4 = 37; D: 4*3+3 + 3*3+3 + 3+1 = 31
        assert tiny_arch.param_count == 68

    def test_record_size(self, tiny_arch):
        assert tiny_arch.record_dtype().itemsize == 8 + 4 * 68


class TestSnapshotStore:
    def test_lookup(self, tiny_arch, make_store):
        store = make_store(tiny_arch, gans=2, epochs=3)
        assert len(store) == 6
        assert store.gans() == [0, 1]
        assert store.epochs_for(1) == [1, 2, 3]
        record = store.record(1, 2)
        assert record.params.shape == (68,)

    def test_missing_record(self, tiny_arch, make_store):
        store = make_store(tiny_arch)
        with pytest.raises(MissingSnapshotError) as exc_info:
            store.record(5, 1)
        assert "gan_index=5" in str(exc_info.value)
        assert exc_info.value.exit_code == 2

    def test_duplicates_rejected(self, tiny_arch):
        params = np.zeros(68, dtype=np.float32)
        records = [SnapshotRecord(0, 1, params), SnapshotRecord(0, 1, params)]
        with pytest.raises(SnapshotFormatError):
            SnapshotStore.from_records(tiny_arch, records)

    def test_epoch_zero_rejected(self, tiny_arch):
        with pytest.raises(SnapshotFormatError):
            SnapshotStore.from_records(tiny_arch, [SnapshotRecord(0, 0, np.zeros(68, dtype=np.float32))])

    def test_wrong_param_dim(self, tiny_arch):
        with pytest.raises(ShapeError):
            SnapshotStore.from_records(tiny_arch, [SnapshotRecord(0, 1, np.zeros(67, dtype=np.float32))])

    def test_non_finite_params(self, tiny_arch):
        params = np.zeros(68, dtype=np.float32)
        params[3] = np.nan
        with pytest.raises(SnapshotFormatError):
            SnapshotStore.from_records(tiny_arch, [SnapshotRecord(0, 1, params)])

    def test_empty_store(self, tiny_arch):
        store = SnapshotStore.from_records(tiny_arch, [])
        assert len(store) == 0
        assert store.params.shape == (0, 68)


class TestStoreFile:
    def test_roundtrip(self, tmp_path, tiny_arch, make_store):
        store = make_store(tiny_arch, gans=3, epochs=2, seed=4)
        path = write_store(tmp_path / "snaps.ggan", store)
        loaded = read_store(path)
        assert loaded.equals(store)
        assert loaded.arch == tiny_arch

    def test_header_layout(self, tmp_path, tiny_arch, make_store):
        store = make_store(tiny_arch, gans=1, epochs=2)
        path = write_store(tmp_path / "snaps.ggan", store)
        raw = open(path, "rb").read()
        assert STORE_HEADER.size == 28
        assert STORE_HEADER.unpack_from(raw) == (b"GGAN", 1, 2, 3, 4, 68, 2)
        assert len(raw) == 28 + 2 * (8 + 4 * 68)
        assert struct.unpack_from("<II", raw, 28) == (0, 1)

    def test_empty_roundtrip(self, tmp_path, tiny_arch):
        path = write_store(tmp_path / "empty.ggan", SnapshotStore(tiny_arch))
        assert len(read_store(path)) == 0

    def test_missing_file(self, tmp_path):
        with pytest.raises(SnapshotFormatError):
            read_store(tmp_path / "absent.ggan")

    def test_bad_magic(self, tmp_path, tiny_arch, make_store):
        path = write_store(tmp_path / "snaps.ggan", make_store(tiny_arch))
        raw = bytearray(open(path, "rb").read())
        raw[:4] = b"NOPE"
        open(path, "wb").write(bytes(raw))
        with pytest.raises(SnapshotFormatError, match="magic"):
            read_store(path)

    def test_bad_version(self, tmp_path, tiny_arch, make_store):
        path = write_store(tmp_path / "snaps.ggan", make_store(tiny_arch))
        raw = bytearray(open(path, "rb").read())
        raw[4:8] = struct.pack("<I", 2)
        open(path, "wb").write(bytes(raw))
        with pytest.raises(SnapshotFormatError, match="version"):
            read_store(path)

    def test_inconsistent_param_count(self, tmp_path, tiny_arch, make_store):
        path = write_store(tmp_path / "snaps.ggan", make_store(tiny_arch))
        raw = bytearray(open(path, "rb").read())
        raw[20:24] = struct.pack("<I", 69)
        open(path, "wb").write(bytes(raw))
        with pytest.raises(SnapshotFormatError, match="param_count"):
            read_store(path)

    @pytest.mark.parametrize("delta", [-1, 1])
    def test_length_must_be_exact(self, tmp_path, tiny_arch, make_store, delta):
        path = write_store(tmp_path / "snaps.ggan", make_store(tiny_arch))
        raw = open(path, "rb").read()
        raw = raw[:-1] if delta < 0 else raw + b"\x00"
        open(path, "wb").write(raw)
        with pytest.raises(SnapshotFormatError):
            read_store(path)

    def test_non_finite_payload(self, tmp_path, tiny_arch, make_store):
        path = write_store(tmp_path / "snaps.ggan", make_store(tiny_arch, gans=1, epochs=1))
        raw = bytearray(open(path, "rb").read())
        raw[36:40] = struct.pack("<f", float("inf"))
        open(path, "wb").write(bytes(raw))
        with pytest.raises(SnapshotFormatError, match="non-finite"):
            read_store(path)


class TestSnapshotWriter:
    def test_streams_records(self, tmp_path, tiny_arch):
        path = tmp_path / "out.ggan"
        with SnapshotWriter(path, tiny_arch, 2) as writer:
            writer.append(SnapshotRecord(0, 1, np.full(68, 0.25, dtype=np.float32)))
            assert not path.exists()
            writer.append(SnapshotRecord(0, 2, np.full(68, -0.25, dtype=np.float32)))
        store = read_store(path)
        np.testing.assert_array_equal(store.record(0, 2).params, -0.25)

    def test_count_mismatch_leaves_no_file(self, tmp_path, tiny_arch):
        path = tmp_path / "out.ggan"
        with pytest.raises(SnapshotFormatError):
            with SnapshotWriter(path, tiny_arch, 2) as writer:
                writer.append(SnapshotRecord(0, 1, np.zeros(68, dtype=np.float32)))
        assert list(tmp_path.iterdir()) == []

    def test_failure_inside_block_leaves_no_file(self, tmp_path, tiny_arch):
        path = tmp_path / "out.ggan"
        with pytest.raises(RuntimeError):
            with SnapshotWriter(path, tiny_arch, 1):
                raise RuntimeError("boom")
        assert list(tmp_path.iterdir()) == []

    def test_duplicate_append(self, tmp_path, tiny_arch):
        with pytest.raises(SnapshotFormatError):
            with SnapshotWriter(tmp_path / "out.ggan", tiny_arch, 2) as writer:
                record = SnapshotRecord(0, 1, np.zeros(68, dtype=np.float32))
                writer.append(record)
                writer.append(record)

    def test_outside_block(self, tmp_path, tiny_arch):
        writer = SnapshotWriter(tmp_path / "out.ggan", tiny_arch, 1)
        with pytest.raises(SnapshotFormatError):
            writer.append(SnapshotRecord(0, 1, np.zeros(68, dtype=np.float32)))


class TestSnapshotBuffer:
    def test_copies_params(self, tiny_arch):
        buffer = SnapshotBuffer(tiny_arch)
        params = np.zeros(68, dtype=np.float32)
        buffer.append(SnapshotRecord(0, 1, params))
        params[:] = 1.0
        assert not buffer.records[0].params.any()
