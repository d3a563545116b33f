"""
The GGAN snapshot store: (gan_index, epoch, ParamVector) records on disk.

File format, all little-endian:
    4 bytes   magic "GGAN"
    u32       version (1)
    u32 x 5   latent_dim, hidden_dim, data_dim, param_count, record_count
    records   u32 gan_index, u32 epoch, param_count x f32 (ParamVector order)
"""

import os
import struct
from contextlib import ExitStack
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Protocol, Sequence, Tuple, Union

import numpy as np

from ..nn import MlpSpec, gan_specs, param_count
from ..utils.errors import logger, SnapshotFormatError, MissingSnapshotError, ShapeError
from ..utils.file_utils import atomic_write

STORE_MAGIC = b"GGAN"
STORE_VERSION = 1
STORE_HEADER = struct.Struct("<4sIIIIII")
RECORD_HEADER = struct.Struct("<II")


@dataclass(frozen=True)
class StoreArch:
    """Architecture of the GANs whose snapshots a store holds."""
    latent_dim: int = 64
    hidden_dim: int = 64
    data_dim: int = 784

    def specs(self) -> Tuple[MlpSpec, MlpSpec]:
        return gan_specs(self.latent_dim, self.hidden_dim, self.data_dim)

    @property
    def param_count(self) -> int:
        return param_count(self.specs())

    def record_dtype(self) -> np.dtype:
        return np.dtype([
            ("gan_index", "<u4"),
            ("epoch", "<u4"),
            ("params", "<f4", (self.param_count,)),
        ])


@dataclass(frozen=True)
class SnapshotRecord:
    """One GAN's flattened parameters after one epoch."""
    gan_index: int
    epoch: int
    params: np.ndarray


class SnapshotSink(Protocol):
    """Anything training can emit snapshot records into."""

    def append(self, record: SnapshotRecord) -> None:
        ...


def _check_record(arch: StoreArch, record: SnapshotRecord) -> None:
    if record.gan_index < 0:
        raise SnapshotFormatError(f"gan_index must be >= 0, got {record.gan_index}")
    if record.epoch < 1:
        raise SnapshotFormatError(f"epoch must be >= 1, got {record.epoch}")
    params = np.asarray(record.params)
    if params.ndim != 1 or params.size != arch.param_count:
        raise ShapeError(f"Snapshot params have dim {params.size}, store expects {arch.param_count}")
    if not np.isfinite(params).all():
        raise SnapshotFormatError(f"Snapshot gan={record.gan_index} epoch={record.epoch} has non-finite values")


class SnapshotStore:
    """
    All snapshot records of a fleet, held as parallel arrays.

    `params` is an (N, param_count) float32 matrix; row i belongs to
    (gan_indices[i], epochs[i]).
    """

    def __init__(
        self,
        arch: StoreArch,
        gan_indices: Optional[np.ndarray] = None,
        epochs: Optional[np.ndarray] = None,
        params: Optional[np.ndarray] = None,
    ):
        self.arch = arch
        self.gan_indices = np.zeros(0, dtype=np.int64) if gan_indices is None else np.asarray(gan_indices, dtype=np.int64)
        self.epochs = np.zeros(0, dtype=np.int64) if epochs is None else np.asarray(epochs, dtype=np.int64)
        if params is None:
            params = np.zeros((0, arch.param_count), dtype=np.float32)
        self.params = np.asarray(params, dtype=np.float32)
        self._index: Optional[Dict[Tuple[int, int], int]] = None
        self.validate()

    @classmethod
    def from_records(cls, arch: StoreArch, records: Sequence[SnapshotRecord]) -> "SnapshotStore":
        for record in records:
            _check_record(arch, record)
        if not records:
            return cls(arch)
        return cls(
            arch,
            np.array([r.gan_index for r in records], dtype=np.int64),
            np.array([r.epoch for r in records], dtype=np.int64),
            np.stack([np.asarray(r.params, dtype=np.float32) for r in records]),
        )

    def validate(self) -> None:
        n = len(self.gan_indices)
        if len(self.epochs) != n or self.params.shape != (n, self.arch.param_count):
            raise ShapeError(
                f"Store arrays disagree: {n} indices, {len(self.epochs)} epochs, params {self.params.shape}"
            )
        if n and (self.gan_indices.min() < 0 or self.epochs.min() < 1):
            raise SnapshotFormatError("Store has negative gan indices or epochs below 1")
        pairs = set(zip(self.gan_indices.tolist(), self.epochs.tolist()))
        if len(pairs) != n:
            raise SnapshotFormatError("Store has duplicate (gan_index, epoch) records")

    def __len__(self) -> int:
        return len(self.gan_indices)

    @property
    def records(self) -> Iterator[SnapshotRecord]:
        for i in range(len(self)):
            yield SnapshotRecord(int(self.gan_indices[i]), int(self.epochs[i]), self.params[i])

    def record(self, gan_index: int, epoch: int) -> SnapshotRecord:
        if self._index is None:
            self._index = {
                (int(g), int(e)): i for i, (g, e) in enumerate(zip(self.gan_indices, self.epochs))
            }
        try:
            i = self._index[(gan_index, epoch)]
        except KeyError:
            raise MissingSnapshotError(f"No snapshot for gan_index={gan_index} epoch={epoch}") from None
        return SnapshotRecord(gan_index, epoch, self.params[i])

    def gans(self) -> List[int]:
        return sorted(set(self.gan_indices.tolist()))

    def epochs_for(self, gan_index: int) -> List[int]:
        return sorted(self.epochs[self.gan_indices == gan_index].tolist())

    def equals(self, other: "SnapshotStore") -> bool:
        """Bitwise equality of header and payload."""
        return (
            self.arch == other.arch
            and np.array_equal(self.gan_indices, other.gan_indices)
            and np.array_equal(self.epochs, other.epochs)
            and self.params.tobytes() == other.params.tobytes()
        )


class SnapshotBuffer:
    """In-memory sink; fleet workers collect a GAN's records here."""

    def __init__(self, arch: StoreArch):
        self.arch = arch
        self.records: List[SnapshotRecord] = []

    def append(self, record: SnapshotRecord) -> None:
        _check_record(self.arch, record)
        self.records.append(SnapshotRecord(record.gan_index, record.epoch, np.array(record.params, dtype=np.float32)))


class SnapshotWriter:
    """
    Streaming sink writing a GGAN file whose record count is known up front.

    The file only appears at `path` once exactly `record_count` records were
    appended and the block exited cleanly.
    """

    def __init__(self, path: Union[str, os.PathLike], arch: StoreArch, record_count: int):
        self.path = Path(path)
        self.arch = arch
        self.record_count = record_count
        self.written = 0
        self._seen: set = set()
        self._stack: Optional[ExitStack] = None
        self._handle = None

    def __enter__(self) -> "SnapshotWriter":
        self._stack = ExitStack()
        self._handle = self._stack.enter_context(atomic_write(self.path))
        self._handle.write(_pack_header(self.arch, self.record_count))
        return self

    def append(self, record: SnapshotRecord) -> None:
        if self._handle is None:
            raise SnapshotFormatError("SnapshotWriter used outside its with-block")
        _check_record(self.arch, record)
        key = (record.gan_index, record.epoch)
        if key in self._seen:
            raise SnapshotFormatError(f"Duplicate snapshot gan_index={key[0]} epoch={key[1]}")
        if self.written >= self.record_count:
            raise SnapshotFormatError(f"More than the declared {self.record_count} records")
        self._seen.add(key)
        self._handle.write(_pack_record(record))
        self.written += 1

    def __exit__(self, exc_type, exc, tb) -> bool:
        stack, self._stack, self._handle = self._stack, None, None
        if exc_type is None and self.written != self.record_count:
            error = SnapshotFormatError(f"Declared {self.record_count} records but wrote {self.written}")
            stack.__exit__(SnapshotFormatError, error, None)
            raise error
        return bool(stack.__exit__(exc_type, exc, tb))


def _pack_header(arch: StoreArch, record_count: int) -> bytes:
    return STORE_HEADER.pack(
        STORE_MAGIC, STORE_VERSION,
        arch.latent_dim, arch.hidden_dim, arch.data_dim, arch.param_count, record_count,
    )


def _pack_record(record: SnapshotRecord) -> bytes:
    return RECORD_HEADER.pack(record.gan_index, record.epoch) + np.asarray(record.params, dtype="<f4").tobytes()


def write_store(path: Union[str, os.PathLike], store: SnapshotStore) -> str:
    """Write `store` as a GGAN file (atomically)."""
    with SnapshotWriter(path, store.arch, len(store)) as writer:
        for record in store.records:
            writer.append(record)
    logger.info(f"Wrote {len(store)} snapshots to {path}")
    return str(path)


def read_store(path: Union[str, os.PathLike]) -> SnapshotStore:
    """
    Read a GGAN file.

    Raises:
        SnapshotFormatError: on magic, version, length or content problems
    """
    try:
        raw = Path(path).read_bytes()
    except FileNotFoundError:
        raise SnapshotFormatError(f"Snapshot store not found: {path}") from None
    if len(raw) < STORE_HEADER.size:
        raise SnapshotFormatError(f"{path}: {len(raw)} bytes is shorter than the store header")

    magic, version, latent_dim, hidden_dim, data_dim, declared_params, count = STORE_HEADER.unpack_from(raw, 0)
    if magic != STORE_MAGIC:
        raise SnapshotFormatError(f"{path}: bad magic {magic!r}, expected {STORE_MAGIC!r}")
    if version != STORE_VERSION:
        raise SnapshotFormatError(f"{path}: unsupported store version {version}")

    arch = StoreArch(latent_dim, hidden_dim, data_dim)
    if declared_params != arch.param_count:
        raise SnapshotFormatError(
            f"{path}: header param_count {declared_params} does not match architecture ({arch.param_count})"
        )

    record_dtype = arch.record_dtype()
    expected = STORE_HEADER.size + count * record_dtype.itemsize
    if len(raw) != expected:
        raise SnapshotFormatError(
            f"{path}: header declares {count} records ({expected} bytes) but file has {len(raw)} bytes"
        )

    table = np.frombuffer(raw, dtype=record_dtype, count=count, offset=STORE_HEADER.size)
    params = table["params"].astype(np.float32)
    if not np.isfinite(params).all():
        raise SnapshotFormatError(f"{path}: payload contains non-finite values")

    store = SnapshotStore(
        arch,
        table["gan_index"].astype(np.int64),
        table["epoch"].astype(np.int64),
        params,
    )
    logger.info(f"Read {len(store)} snapshots (param_count={arch.param_count}) from {path}")
    return store
