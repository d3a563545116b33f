"""
Fleet orchestration: many independent GANs, one snapshot store.

Each GAN owns the random stream (seed, gan_index), so the store bytes do not
depend on the number of workers. Records are written in (gan_index, epoch) order.
"""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from .gan_config import GanConfig
from .gan_trainer import EpochCallback, EpochStats, train_gan_with_snapshots, as_images
from ..data.mnist import MnistDataset
from ..data.snapshots import SnapshotBuffer, SnapshotRecord, SnapshotWriter
from ..utils.errors import ConfigurationError, FleetTrainingError

logger = logging.getLogger(__name__)

# Set in each worker process by the pool initializer
_worker_images: Optional[np.ndarray] = None


@dataclass
class FleetResult:
    path: str
    record_count: int
    histories: Dict[int, List[EpochStats]] = field(default_factory=dict)


def _init_worker(images: np.ndarray) -> None:
    global _worker_images
    _worker_images = images


def _train_member(job: Tuple[GanConfig, int]) -> Tuple[int, List[SnapshotRecord], List[EpochStats]]:
    config, gan_index = job
    buffer = SnapshotBuffer(config.arch())
    try:
        history = train_gan_with_snapshots(config, _worker_images, buffer, gan_index)
    except Exception as e:
        raise FleetTrainingError(gan_index, e) from e
    return gan_index, buffer.records, history


def run_fleet(
    num_gans: int,
    config: GanConfig,
    dataset: Union[MnistDataset, np.ndarray],
    out_path: Union[str, os.PathLike],
    workers: int = 1,
    on_epoch: Optional[EpochCallback] = None,
) -> FleetResult:
    """
    Train `num_gans` GANs and write their snapshots to a GGAN store.

    With workers > 1 the GANs train in separate processes; `on_epoch` then
    fires for a GAN's epochs once that GAN has finished, still in index order.

    Raises:
        FleetTrainingError: naming the first failing gan_index; no store is written
    """
    if num_gans < 1:
        raise ConfigurationError(f"num_gans must be >= 1, got {num_gans}")
    if workers < 1:
        raise ConfigurationError(f"workers must be >= 1, got {workers}")

    images = as_images(dataset)
    record_count = num_gans * config.epochs
    result = FleetResult(str(out_path), record_count)
    logger.info(
        f"Training {num_gans} GANs x {config.epochs} epochs on {len(images)} images "
        f"with {workers} worker(s), seed={config.seed}"
    )

    with SnapshotWriter(out_path, config.arch(), record_count) as writer:
        if workers == 1 or num_gans == 1:
            for gan_index in range(num_gans):
                try:
                    result.histories[gan_index] = train_gan_with_snapshots(
                        config, images, writer, gan_index, on_epoch
                    )
                except Exception as e:
                    raise FleetTrainingError(gan_index, e) from e
        else:
            _run_parallel(num_gans, config, images, writer, workers, on_epoch, result)

    logger.info(f"Fleet finished: {record_count} snapshots in {out_path}")
    return result


def _run_parallel(
    num_gans: int,
    config: GanConfig,
    images: np.ndarray,
    writer: SnapshotWriter,
    workers: int,
    on_epoch: Optional[EpochCallback],
    result: FleetResult,
) -> None:
    executor = ProcessPoolExecutor(
        max_workers=min(workers, num_gans),
        initializer=_init_worker,
        initargs=(images,),
    )
    try:
        jobs = [(config, gan_index) for gan_index in range(num_gans)]
        for gan_index, records, history in executor.map(_train_member, jobs):
            for record in records:
                writer.append(record)
            result.histories[gan_index] = history
            if on_epoch:
                for stats in history:
                    on_epoch(gan_index, stats)
    except BaseException:
        executor.shutdown(wait=False, cancel_futures=True)
        raise
    executor.shutdown()
