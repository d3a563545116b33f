"""
Epoch progression figure of one GAN from the snapshot store.
"""

from typing import Optional

import typer

from ..base import BaseCommand, parse_ints
from ...data import read_store
from ...render import EPOCH_FIGURE_EPOCHS, export_image, render_epoch_figure
from ...utils.config import PathsSection, RenderSection

DEFAULT_OUTPUT = "epochs.pgm"


class EpochsFigureCommand(BaseCommand):
    """Render one row per epoch of a single GAN, all rows on the same noise"""

    name = "epochs-figure"
    help = "Render samples of one GAN at selected training epochs"

    @classmethod
    def _run_impl(
        cls,
        ctx: typer.Context,
        snapshots: Optional[str] = typer.Option(
            None, "--snapshots", help="Snapshot store", show_default=PathsSection.snapshots
        ),
        gan_index: int = typer.Option(0, "--gan-index", help="GAN whose snapshots are rendered"),
        epochs: Optional[str] = typer.Option(
            None, "--epochs", help="Comma-separated epochs", show_default=",".join(map(str, EPOCH_FIGURE_EPOCHS))
        ),
        samples: Optional[int] = typer.Option(
            None, "--samples", help="Samples per epoch", show_default=str(RenderSection.samples)
        ),
        noise_seed: Optional[int] = typer.Option(
            None, "--noise-seed", help="Seed of the fixed noise", show_default=str(RenderSection.noise_seed)
        ),
        padding: Optional[int] = typer.Option(
            None, "--padding", help="Pixels between tiles", show_default=str(RenderSection.padding)
        ),
        out: Optional[str] = typer.Option(
            None, "--out", "-o", help="Image to write (.pgm or .png)", show_default=DEFAULT_OUTPUT
        ),
        config: Optional[str] = typer.Option(None, "--config", help="YAML or key=value config file"),
    ):
        """Render samples of one GAN at selected training epochs"""
        run_config = cls.load_config(ctx, config, {
            "paths.snapshots": snapshots,
            "paths.output": out,
            "render.epochs": parse_ints(epochs, "--epochs") if epochs is not None else None,
            "render.samples": samples,
            "render.noise_seed": noise_seed,
            "render.padding": padding,
        })
        paths, render = run_config.paths, run_config.render
        output = paths.output or DEFAULT_OUTPUT
        cls.check(run_config, inputs=[("--snapshots", paths.snapshots)], outputs=[("--out", output)])

        store = read_store(paths.snapshots)
        image = render_epoch_figure(
            store,
            gan_index,
            render.epochs,
            n_samples=render.samples,
            noise_seed=render.noise_seed,
            padding=render.padding,
        )
        export_image(image, output)
        cls.success(f"Wrote {len(render.epochs)}-row epoch figure of gan {gan_index} to {output}")
