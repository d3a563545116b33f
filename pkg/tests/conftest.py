"""
Configuration and fixtures for pytest.
"""

import gzip
import logging
import os
import struct
import sys

import numpy as np
import pytest

# Add the project root to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from gan_gan.data import StoreArch, SnapshotRecord, SnapshotStore  # noqa: E402
from gan_gan.training import GanConfig  # noqa: E402

GANGAN_ENV_VARS = ("GANGAN_MNIST_DIR", "GANGAN_CONFIG", "GANGAN_LOG_LEVEL")

# Captured before clean_environment hides it from the tests
REAL_MNIST_DIR = os.environ.get("GANGAN_MNIST_DIR")


def _write_idx(path, pixels, magic=0x00000803, compress=False, declared_count=None):
    pixels = np.asarray(pixels, dtype=np.uint8)
    count = len(pixels) if declared_count is None else declared_count
    rows, cols = pixels.shape[1], pixels.shape[2]
    payload = struct.pack(">IIII", magic, count, rows, cols) + pixels.tobytes()
    if compress:
        payload = gzip.compress(payload)
    with open(path, "wb") as f:
        f.write(payload)
    return str(path)


def synthetic_digits(n, seed=0):
    """Stroke-like 28x28 uint8 images: a bright bar at a random position and angle."""
    rng = np.random.default_rng(seed)
    images = np.zeros((n, 28, 28), dtype=np.uint8)
    yy, xx = np.mgrid[0:28, 0:28]
    for i in range(n):
        cy, cx = rng.uniform(10, 18, size=2)
        angle = rng.uniform(0, np.pi)
        distance = np.abs((xx - cx) * np.sin(angle) - (yy - cy) * np.cos(angle))
        along = np.abs((xx - cx) * np.cos(angle) + (yy - cy) * np.sin(angle))
        stroke = (distance < 1.5) & (along < 8)
        images[i][stroke] = 255
    return images


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Keep the caller's GANGAN_* variables out of the tests."""
    for var in GANGAN_ENV_VARS:
        monkeypatch.delenv(var, raising=False)
    yield
    package_logger = logging.getLogger("gan_gan")
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)
        handler.close()
    package_logger.propagate = True


@pytest.fixture
def idx_writer():
    """Write an IDX image file: idx_writer(path, pixels, magic=..., compress=..., declared_count=...)."""
    return _write_idx


@pytest.fixture
def mnist_file(tmp_path):
    """A small synthetic MNIST-format training file (256 images)."""
    return _write_idx(tmp_path / "train-images-idx3-ubyte", synthetic_digits(256))


@pytest.fixture(scope="session")
def shared_mnist_file(tmp_path_factory):
    """The synthetic 256-image training file, shared by module-scoped fixtures."""
    return _write_idx(tmp_path_factory.mktemp("mnist") / "train-images-idx3-ubyte", synthetic_digits(256))


@pytest.fixture
def real_mnist_images():
    """The official MNIST training images, or skip when GANGAN_MNIST_DIR is not set."""
    from gan_gan.data import find_mnist_images

    found = find_mnist_images(REAL_MNIST_DIR) if REAL_MNIST_DIR else None
    if found is None:
        pytest.skip("GANGAN_MNIST_DIR does not point at the MNIST training images")
    return str(found)


@pytest.fixture
def tiny_arch():
    """A store architecture small enough for exhaustive tests (68 parameters)."""
    return StoreArch(latent_dim=2, hidden_dim=3, data_dim=4)


@pytest.fixture
def make_store():
    """make_store(arch, gans, epochs, seed) -> SnapshotStore of random values in (-0.5, 0.5)."""
    def _make(arch, gans=2, epochs=3, seed=0):
        rng = np.random.default_rng(seed)
        records = [
            SnapshotRecord(g, e, rng.uniform(-0.5, 0.5, arch.param_count).astype(np.float32))
            for g in range(gans)
            for e in range(1, epochs + 1)
        ]
        return SnapshotStore.from_records(arch, records)
    return _make


@pytest.fixture
def small_gan_config():
    """MNIST-shaped GAN with narrow layers for fast training tests."""
    return GanConfig(latent_dim=4, hidden_dim=8, epochs=2, batch_size=16, seed=3)
