"""
The GGMN model file.

Layout, all little-endian:
    4 bytes   magic "GGMN"
    u32       version (1)
    u32 x 10  latent_dim, gen_hidden, disc_hidden, data_dim,
              source latent_dim, source hidden_dim, source data_dim,
              epochs_trained, generator param count, discriminator param count
    f32[]     generator ParamVector, then discriminator ParamVector
    u32       history length H
    f64[2H]   per-epoch (d_loss, g_loss)
"""

import os
import struct
from pathlib import Path
from typing import Union

import numpy as np

from .gangan_config import GanGanConfig
from .model import GanGanModel
from ..data.snapshots import StoreArch
from ..nn import flatten_mlp, unflatten_mlp
from ..training.gan_trainer import EpochStats
from ..utils.errors import logger, ModelFormatError, ShapeError
from ..utils.file_utils import atomic_write

MODEL_MAGIC = b"GGMN"
MODEL_VERSION = 1
MODEL_HEADER = struct.Struct("<4sI10I")
HISTORY_COUNT = struct.Struct("<I")


def write_model(path: Union[str, os.PathLike], model: GanGanModel) -> str:
    """Write `model` as a GGMN file (atomically)."""
    generator = flatten_mlp(model.generator).astype("<f4")
    discriminator = flatten_mlp(model.discriminator).astype("<f4")
    history = np.array([(h.d_loss, h.g_loss) for h in model.history], dtype="<f8").reshape(-1, 2)

    with atomic_write(path) as handle:
        handle.write(MODEL_HEADER.pack(
            MODEL_MAGIC, MODEL_VERSION,
            model.latent_dim, model.gen_hidden, model.disc_hidden, model.data_dim,
            model.source.latent_dim, model.source.hidden_dim, model.source.data_dim,
            model.epochs_trained, generator.size, discriminator.size,
        ))
        handle.write(generator.tobytes())
        handle.write(discriminator.tobytes())
        handle.write(HISTORY_COUNT.pack(len(history)))
        handle.write(history.tobytes())
    logger.info(f"Wrote GAN-GAN model (latent_dim={model.latent_dim}) to {path}")
    return str(path)


def read_model(path: Union[str, os.PathLike]) -> GanGanModel:
    """
    Read a GGMN file.

    Raises:
        ModelFormatError: on magic, version or dimension problems
    """
    try:
        raw = Path(path).read_bytes()
    except FileNotFoundError:
        raise ModelFormatError(f"Model file not found: {path}") from None
    if len(raw) < MODEL_HEADER.size:
        raise ModelFormatError(f"{path}: {len(raw)} bytes is shorter than the model header")

    (magic, version, latent_dim, gen_hidden, disc_hidden, data_dim,
     src_latent, src_hidden, src_data, epochs_trained, gen_count, disc_count) = MODEL_HEADER.unpack_from(raw, 0)
    if magic != MODEL_MAGIC:
        raise ModelFormatError(f"{path}: bad magic {magic!r}, expected {MODEL_MAGIC!r}")
    if version != MODEL_VERSION:
        raise ModelFormatError(f"{path}: unsupported model version {version}")

    try:
        source = StoreArch(src_latent, src_hidden, src_data)
        config = GanGanConfig(
            latent_dim=latent_dim, gen_hidden=gen_hidden, disc_hidden=disc_hidden, data_dim=data_dim,
        )
        g_spec, d_spec = config.generator_spec(), config.discriminator_spec()
    except (ValueError, ShapeError) as e:
        raise ModelFormatError(f"{path}: invalid architecture in header ({e})") from e

    if data_dim != source.param_count:
        raise ModelFormatError(f"{path}: data_dim {data_dim} != source param_count {source.param_count}")
    if gen_count != g_spec.param_count or disc_count != d_spec.param_count:
        raise ModelFormatError(
            f"{path}: parameter counts ({gen_count}, {disc_count}) do not match the header architecture "
            f"({g_spec.param_count}, {d_spec.param_count})"
        )

    offset = MODEL_HEADER.size
    params_end = offset + 4 * (gen_count + disc_count)
    if len(raw) < params_end + HISTORY_COUNT.size:
        raise ModelFormatError(f"{path}: file truncated inside the parameter block")
    (history_len,) = HISTORY_COUNT.unpack_from(raw, params_end)
    expected = params_end + HISTORY_COUNT.size + 16 * history_len
    if len(raw) != expected:
        raise ModelFormatError(f"{path}: expected {expected} bytes, file has {len(raw)}")

    params = np.frombuffer(raw, dtype="<f4", count=gen_count + disc_count, offset=offset).astype(np.float32)
    if not np.isfinite(params).all():
        raise ModelFormatError(f"{path}: parameters contain non-finite values")
    history = np.frombuffer(
        raw, dtype="<f8", count=2 * history_len, offset=params_end + HISTORY_COUNT.size,
    ).reshape(-1, 2)

    model = GanGanModel(
        generator=unflatten_mlp(params[:gen_count], g_spec),
        discriminator=unflatten_mlp(params[gen_count:], d_spec),
        source=source,
        epochs_trained=epochs_trained,
        history=[EpochStats(i + 1, float(d), float(g)) for i, (d, g) in enumerate(history)],
    )
    logger.info(f"Read GAN-GAN model (latent_dim={latent_dim}, epochs={epochs_trained}) from {path}")
    return model
