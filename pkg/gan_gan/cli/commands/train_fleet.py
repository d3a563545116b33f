"""
Fleet training command: many MNIST GANs, one snapshot per GAN per epoch.
"""

from typing import Optional

import typer

from ..base import BaseCommand
from ...data import load_mnist
from ...training import run_fleet
from ...utils.config import FleetSection, PathsSection
from ...utils.errors import CliArgumentError


class TrainFleetCommand(BaseCommand):
    """Train the GAN fleet and write the GGAN snapshot store"""

    name = "train-fleet"
    help = "Train a fleet of MNIST GANs and write their per-epoch snapshots"

    @classmethod
    def _run_impl(
        cls,
        ctx: typer.Context,
        mnist_images: Optional[str] = typer.Option(
            None, "--mnist-images", help="MNIST train-images-idx3-ubyte[.gz] (or set GANGAN_MNIST_DIR)"
        ),
        num_gans: Optional[int] = typer.Option(
            None, "--num-gans", help="Number of GANs", show_default=str(FleetSection.num_gans)
        ),
        epochs: Optional[int] = typer.Option(
            None, "--epochs", help="Epochs per GAN", show_default=str(FleetSection.epochs)
        ),
        batch: Optional[int] = typer.Option(
            None, "--batch", help="Batch size", show_default=str(FleetSection.batch_size)
        ),
        lr: Optional[float] = typer.Option(
            None, "--lr", help="Adam learning rate", show_default=str(FleetSection.lr)
        ),
        latent_dim: Optional[int] = typer.Option(
            None, "--latent-dim", help="Generator latent dimension", show_default=str(FleetSection.latent_dim)
        ),
        hidden_dim: Optional[int] = typer.Option(
            None, "--hidden-dim", help="Hidden width", show_default=str(FleetSection.hidden_dim)
        ),
        seed: Optional[int] = typer.Option(
            None, "--seed", help="Base seed; GAN i uses stream (seed, i)", show_default=str(FleetSection.seed)
        ),
        workers: Optional[int] = typer.Option(
            None, "--workers", help="Worker processes", show_default=str(FleetSection.workers)
        ),
        subset: Optional[int] = typer.Option(
            None, "--subset", help="Use only the first N images", show_default="all"
        ),
        out: Optional[str] = typer.Option(
            None, "--out", "-o", help="Snapshot store to write", show_default=PathsSection.snapshots
        ),
        config: Optional[str] = typer.Option(None, "--config", help="YAML or key=value config file"),
    ):
        """Train a fleet of MNIST GANs and write their per-epoch snapshots"""
        run_config = cls.load_config(ctx, config, {
            "paths.mnist_images": mnist_images,
            "paths.snapshots": out,
            "fleet.num_gans": num_gans,
            "fleet.epochs": epochs,
            "fleet.batch_size": batch,
            "fleet.lr": lr,
            "fleet.latent_dim": latent_dim,
            "fleet.hidden_dim": hidden_dim,
            "fleet.seed": seed,
            "fleet.workers": workers,
            "fleet.subset": subset,
        })
        paths, fleet = run_config.paths, run_config.fleet
        if not paths.mnist_images:
            raise CliArgumentError("Missing option '--mnist-images' (or set GANGAN_MNIST_DIR)")
        cls.check(
            run_config,
            inputs=[("--mnist-images", paths.mnist_images)],
            outputs=[("--out", paths.snapshots)],
        )

        dataset = load_mnist(paths.mnist_images, limit=fleet.subset)
        cls.info(
            f"Training {fleet.num_gans} GANs x {fleet.epochs} epochs on {dataset.count} images "
            f"({fleet.workers} worker(s))"
        )
        result = run_fleet(
            fleet.num_gans,
            run_config.gan_config(),
            dataset,
            paths.snapshots,
            workers=fleet.workers,
            on_epoch=lambda gan_index, stats: cls.emit(stats.progress_line(gan_index)),
        )
        cls.success(f"Wrote {result.record_count} snapshots to {result.path}")
