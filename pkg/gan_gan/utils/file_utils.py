"""
File utility functions for gan-gan.

All artifacts (stores, models, figures) are written through atomic_write so
that an interrupted run never leaves a partial file behind.
"""

import os
import tempfile
from contextlib import contextmanager
from pathlib import Path
from typing import BinaryIO, Iterator, Union

PathLike = Union[str, os.PathLike]


def default_file_mode() -> int:
    """Mode a plain open() would create under the current umask."""
    umask = os.umask(0)
    os.umask(umask)
    return 0o666 & ~umask


@contextmanager
def atomic_write(path: PathLike) -> Iterator[BinaryIO]:
    """
    Open a temporary file next to `path` for binary writing and move it into
    place when the block exits without an exception.

    Args:
        path: Final location of the file

    Yields:
        A writable binary file object
    """
    target = Path(path)
    directory = target.parent if str(target.parent) else Path(".")
    directory.mkdir(parents=True, exist_ok=True)

    fd, tmp_name = tempfile.mkstemp(prefix=f".{target.name}.", suffix=".tmp", dir=directory)
    try:
        with os.fdopen(fd, "wb") as handle:
            yield handle
            handle.flush()
            os.fsync(handle.fileno())
        # mkstemp creates 0600
        os.chmod(tmp_name, default_file_mode())
        os.replace(tmp_name, target)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except FileNotFoundError:
            pass
        raise


def write_bytes_atomic(path: PathLike, payload: bytes) -> str:
    """
    Write `payload` to `path` atomically.

    Returns:
        The path written, as a string
    """
    with atomic_write(path) as handle:
        handle.write(payload)
    return str(path)


def ensure_writable_parent(path: PathLike) -> bool:
    """Return True if the parent directory of `path` exists (or can be created) and is writable."""
    parent = Path(path).resolve().parent
    ancestor = parent
    while not ancestor.exists():
        if ancestor.parent == ancestor:
            return False
        ancestor = ancestor.parent
    return os.access(ancestor, os.W_OK)
