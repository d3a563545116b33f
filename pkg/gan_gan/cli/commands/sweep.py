"""
Latent sweep figure: GANs sampled along a 1-D GAN-GAN latent space.
"""

from typing import Optional

import typer

from ..base import BaseCommand, parse_range
from ...meta import read_model
from ...render import export_image, render_sweep_figure
from ...utils.config import PathsSection, RenderSection
from ...utils.errors import CliArgumentError

DEFAULT_OUTPUT = "sweep.pgm"


class SweepCommand(BaseCommand):
    """Render rows of GANs swept across the latent space, columns of fixed noise"""

    name = "sweep"
    help = "Render a latent-sweep figure from a 1-D GAN-GAN"

    @classmethod
    def _run_impl(
        cls,
        ctx: typer.Context,
        model: Optional[str] = typer.Option(
            None, "--model", help="GAN-GAN model file", show_default=PathsSection.model
        ),
        rows: Optional[int] = typer.Option(
            None, "--rows", help="Number of swept GANs", show_default=str(RenderSection.rows)
        ),
        cols: Optional[int] = typer.Option(
            None, "--cols", help="Number of fixed noise vectors", show_default=str(RenderSection.cols)
        ),
        z_range: Optional[str] = typer.Option(
            None, "--range", help="Latent interval MIN:MAX, endpoints included", show_default="-2:2"
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
        """Render a latent-sweep figure from a 1-D GAN-GAN"""
        bounds = parse_range(z_range) if z_range is not None else (None, None)
        run_config = cls.load_config(ctx, config, {
            "paths.model": model,
            "paths.output": out,
            "render.rows": rows,
            "render.cols": cols,
            "render.z_min": bounds[0],
            "render.z_max": bounds[1],
            "render.noise_seed": noise_seed,
            "render.padding": padding,
        })
        paths, render = run_config.paths, run_config.render
        output = paths.output or DEFAULT_OUTPUT
        cls.check(run_config, inputs=[("--model", paths.model)], outputs=[("--out", output)])

        gangan = read_model(paths.model)
        if gangan.latent_dim != 1:
            raise CliArgumentError(
                f"Sweeps need a 1-D latent space but {paths.model} has latent_dim={gangan.latent_dim}; "
                "use 'gan-gan sample --z' for multi-dimensional models"
            )

        image = render_sweep_figure(
            gangan,
            n_rows=render.rows,
            n_cols=render.cols,
            z_range=(render.z_min, render.z_max),
            noise_seed=render.noise_seed,
            padding=render.padding,
        )
        export_image(image, output)
        cls.success(f"Wrote {image.shape[1]}x{image.shape[0]} sweep figure to {output}")
