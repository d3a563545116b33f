"""
Unit tests for the GAN-GAN: training, sampling and the GGMN model file.
"""

import struct
from unittest.mock import patch

import numpy as np
import pytest

from gan_gan.data import SnapshotRecord, SnapshotStore
from gan_gan.meta import (
    GanGanConfig, GanGanModel, train_gangan, sample_params, sample_gan, sweep_points,
    latent_path, latent_sweep, write_model, read_model,
)
from gan_gan.meta.model_io import MODEL_HEADER
from gan_gan.nn import Mlp, MlpSpec, init_mlp, predict
from gan_gan.rand import Prng
from gan_gan.utils.errors import (
    ArchitectureMismatchError, ConfigurationError, LatentDimensionError, ModelFormatError,
    SnapshotFormatError,
)


def _config(arch, **overrides):
    values = dict(latent_dim=1, gen_hidden=6, disc_hidden=4, data_dim=arch.param_count, epochs=3, batch_size=4)
    values.update(overrides)
    return GanGanConfig(**values)


@pytest.fixture
def trained(tiny_arch, make_store):
    store = make_store(tiny_arch, gans=3, epochs=4)
    return train_gangan(_config(tiny_arch), store)


class TestGanGanConfig:
    def test_defaults(self):
        config = GanGanConfig()
        assert config.latent_dim == 1
        assert config.gen_hidden == 64 and config.disc_hidden == 8
        assert config.epochs == 250 and config.batch_size == 32
        assert config.data_dim == 113745

    def test_full_size_parameter_counts(self):
        config = GanGanConfig()
        assert config.generator_spec().param_count == 7397713
        assert config.discriminator_spec().param_count == 910049


class TestTrainGanGan:
    def test_trains_for_configured_epochs(self, tiny_arch, make_store):
        seen = []
        model = train_gangan(_config(tiny_arch), make_store(tiny_arch), on_epoch=lambda s: seen.append(s.epoch))
        assert model.epochs_trained == 3
        assert [h.epoch for h in model.history] == [1, 2, 3]
        assert seen == [1, 2, 3]
        assert model.source == tiny_arch
        assert model.data_dim == 68

    def test_deterministic(self, tiny_arch, make_store):
        store = make_store(tiny_arch)
        first = train_gangan(_config(tiny_arch), store)
        second = train_gangan(_config(tiny_arch), store)
        assert first.equals(second)
        third = train_gangan(_config(tiny_arch, seed=1), store)
        assert not first.equals(third)

    def test_empty_store(self, tiny_arch):
        with pytest.raises(SnapshotFormatError):
            train_gangan(_config(tiny_arch), SnapshotStore(tiny_arch))

    def test_dimension_mismatch(self, tiny_arch, make_store):
        with pytest.raises(ArchitectureMismatchError):
            train_gangan(_config(tiny_arch, data_dim=67), make_store(tiny_arch))

    def test_saturation_warning(self, tiny_arch):
        params = np.zeros(68, dtype=np.float32)
        params[0] = 0.9995
        store = SnapshotStore.from_records(tiny_arch, [SnapshotRecord(0, 1, params)])
        with patch("gan_gan.meta.model.logger") as mock_logger:
            train_gangan(_config(tiny_arch, epochs=1), store)
        mock_logger.warning.assert_called_once()
        assert "0.999" in mock_logger.warning.call_args[0][0]

    def test_no_warning_inside_tanh_range(self, tiny_arch, make_store):
        with patch("gan_gan.meta.model.logger") as mock_logger:
            train_gangan(_config(tiny_arch, epochs=1), make_store(tiny_arch))
        mock_logger.warning.assert_not_called()


class TestGanGanModel:
    def test_rejects_mismatched_source(self, tiny_arch):
        generator = Mlp.zeros(MlpSpec.generator(1, 4, 67))
        discriminator = Mlp.zeros(MlpSpec.discriminator(67, 4))
        with pytest.raises(ArchitectureMismatchError):
            GanGanModel(generator, discriminator, tiny_arch)

    def test_rejects_sigmoid_generator(self, tiny_arch):
        generator = Mlp.zeros(MlpSpec((1, 4, 4, 68), "sigmoid"))
        discriminator = Mlp.zeros(MlpSpec.discriminator(68, 4))
        with pytest.raises(ArchitectureMismatchError):
            GanGanModel(generator, discriminator, tiny_arch)


class TestSampling:
    def test_sample_params_range_and_purity(self, trained):
        a = sample_params(trained, [0.5])
        b = sample_params(trained, 0.5)
        assert a.shape == (68,)
        assert a.dtype == np.float32
        assert np.all(np.abs(a) < 1)
        np.testing.assert_array_equal(a, b)

    def test_sample_gan_matches_params(self, trained):
        generator, discriminator = sample_gan(trained, [-1.0])
        vector = sample_params(trained, [-1.0])
        np.testing.assert_array_equal(generator.weights[0].ravel(), vector[:6])
        z = np.zeros((2, 2), dtype=np.float32)
        assert predict(discriminator, predict(generator, z)).shape == (2, 1)

    def test_wrong_latent_length(self, trained):
        with pytest.raises(LatentDimensionError):
            sample_params(trained, [0.0, 1.0])

    def test_sweep_points(self):
        points = sweep_points(32, -2.0, 2.0)
        assert points[0] == -2.0 and points[-1] == 2.0
        assert points[1] == pytest.approx(-2.0 + 4.0 / 31)
        with pytest.raises(ConfigurationError):
            sweep_points(1, -2.0, 2.0)

    def test_latent_sweep(self, trained):
        samples = latent_sweep(trained, 5, (-1.0, 1.0))
        assert [s.z[0] for s in samples] == [-1.0, -0.5, 0.0, 0.5, 1.0]
        assert all(s.generator.spec.layer_dims == (2, 3, 3, 4) for s in samples)

    def test_adjacent_sweep_gans_differ(self, trained):
        vectors = np.stack([sample_params(trained, s.z) for s in latent_sweep(trained, 32)])
        distances = np.linalg.norm(np.diff(vectors.astype(np.float64), axis=0), axis=1)
        assert distances.shape == (31,)
        assert np.isfinite(distances).all()
        assert (distances > 0).any()

    def test_latent_sweep_needs_1d(self, tiny_arch, make_store):
        model = train_gangan(_config(tiny_arch, latent_dim=2, epochs=1), make_store(tiny_arch))
        with pytest.raises(LatentDimensionError):
            latent_sweep(model)
        path = latent_path(model, [0.0, 0.0], [1.0, -1.0], 3)
        np.testing.assert_allclose(path[1].z, [0.5, -0.5])


class TestModelFile:
    def test_roundtrip(self, tmp_path, trained):
        path = write_model(tmp_path / "m.ggmn", trained)
        loaded = read_model(path)
        assert loaded.equals(trained)
        np.testing.assert_array_equal(sample_params(loaded, [0.3]), sample_params(trained, [0.3]))

    def test_header(self, tmp_path, trained):
        path = write_model(tmp_path / "m.ggmn", trained)
        fields = MODEL_HEADER.unpack_from(open(path, "rb").read())
        g_count = trained.generator.spec.param_count
        d_count = trained.discriminator.spec.param_count
        assert fields == (b"GGMN", 1, 1, 6, 4, 68, 2, 3, 4, 3, g_count, d_count)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ModelFormatError):
            read_model(tmp_path / "absent.ggmn")

    def test_bad_magic(self, tmp_path, trained):
        path = write_model(tmp_path / "m.ggmn", trained)
        raw = bytearray(open(path, "rb").read())
        raw[:4] = b"GGAN"
        open(path, "wb").write(bytes(raw))
        with pytest.raises(ModelFormatError, match="magic"):
            read_model(path)

    def test_source_mismatch(self, tmp_path, trained):
        path = write_model(tmp_path / "m.ggmn", trained)
        raw = bytearray(open(path, "rb").read())
        # source hidden_dim: sixth u32 after magic and version
        raw[8 + 5 * 4:8 + 6 * 4] = struct.pack("<I", 5)
        open(path, "wb").write(bytes(raw))
        with pytest.raises(ModelFormatError):
            read_model(path)

    def test_truncated(self, tmp_path, trained):
        path = write_model(tmp_path / "m.ggmn", trained)
        raw = open(path, "rb").read()
        open(path, "wb").write(raw[:-3])
        with pytest.raises(ModelFormatError):
            read_model(path)

    def test_non_finite_params(self, tmp_path, tiny_arch):
        g_spec = MlpSpec.generator(1, 2, 68)
        d_spec = MlpSpec.discriminator(68, 2)
        generator = init_mlp(g_spec, Prng(0))
        generator.biases[2][0] = np.nan
        model = GanGanModel(generator, init_mlp(d_spec, Prng(1)), tiny_arch)
        path = write_model(tmp_path / "m.ggmn", model)
        with pytest.raises(ModelFormatError, match="non-finite"):
            read_model(path)
