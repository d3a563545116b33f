"""
Meta-training command: a GAN-GAN over the fleet's snapshots.
"""

from typing import Optional

import typer

from ..base import BaseCommand
from ...data import read_store
from ...meta import train_gangan, write_model
from ...utils.config import MetaSection, PathsSection


class TrainMetaCommand(BaseCommand):
    """Train the GAN-GAN and write the GGMN model"""

    name = "train-meta"
    help = "Train a GAN-GAN on a snapshot store"

    @classmethod
    def _run_impl(
        cls,
        ctx: typer.Context,
        snapshots: Optional[str] = typer.Option(
            None, "--snapshots", help="Snapshot store to train on", show_default=PathsSection.snapshots
        ),
        epochs: Optional[int] = typer.Option(
            None, "--epochs", help="Training epochs", show_default=str(MetaSection.epochs)
        ),
        batch: Optional[int] = typer.Option(
            None, "--batch", help="Batch size", show_default=str(MetaSection.batch_size)
        ),
        latent_dim: Optional[int] = typer.Option(
            None, "--latent-dim", help="Latent dimension (sweeps need 1)", show_default=str(MetaSection.latent_dim)
        ),
        gen_hidden: Optional[int] = typer.Option(
            None, "--gen-hidden", help="Generator hidden width", show_default=str(MetaSection.gen_hidden)
        ),
        disc_hidden: Optional[int] = typer.Option(
            None, "--disc-hidden", help="Discriminator hidden width", show_default=str(MetaSection.disc_hidden)
        ),
        lr: Optional[float] = typer.Option(
            None, "--lr", help="Adam learning rate", show_default=str(MetaSection.lr)
        ),
        seed: Optional[int] = typer.Option(
            None, "--seed", help="Seed", show_default=str(MetaSection.seed)
        ),
        out: Optional[str] = typer.Option(
            None, "--out", "-o", help="Model file to write", show_default=PathsSection.model
        ),
        config: Optional[str] = typer.Option(None, "--config", help="YAML or key=value config file"),
    ):
        """Train a GAN-GAN on a snapshot store"""
        run_config = cls.load_config(ctx, config, {
            "paths.snapshots": snapshots,
            "paths.model": out,
            "meta.epochs": epochs,
            "meta.batch_size": batch,
            "meta.latent_dim": latent_dim,
            "meta.gen_hidden": gen_hidden,
            "meta.disc_hidden": disc_hidden,
            "meta.lr": lr,
            "meta.seed": seed,
        })
        paths = run_config.paths
        cls.check(
            run_config,
            inputs=[("--snapshots", paths.snapshots)],
            outputs=[("--out", paths.model)],
        )

        store = read_store(paths.snapshots)
        gangan_config = run_config.gangan_config(store.arch.param_count)
        cls.info(
            f"Training GAN-GAN (latent_dim={gangan_config.latent_dim}) for {gangan_config.epochs} epochs "
            f"on {len(store)} snapshots of dim {gangan_config.data_dim}"
        )
        model = train_gangan(gangan_config, store, on_epoch=lambda stats: cls.emit(stats.progress_line()))
        write_model(paths.model, model)
        cls.success(f"Wrote GAN-GAN model to {paths.model}")
