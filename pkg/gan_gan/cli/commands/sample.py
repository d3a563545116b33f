"""
Sample command: one GAN from an explicit latent code.
"""

from typing import Optional

import typer

from ..base import BaseCommand, parse_floats
from ...meta import read_model
from ...render import export_image, render_sample_figure
from ...utils.config import PathsSection, RenderSection

DEFAULT_OUTPUT = "sample.pgm"


class SampleCommand(BaseCommand):
    """Render samples from the GAN the GAN-GAN produces at --z"""

    name = "sample"
    help = "Render samples of the GAN at an explicit latent code"

    @classmethod
    def _run_impl(
        cls,
        ctx: typer.Context,
        z: str = typer.Option(..., "--z", help="Latent code, comma-separated (one value per latent dimension)"),
        model: Optional[str] = typer.Option(
            None, "--model", help="GAN-GAN model file", show_default=PathsSection.model
        ),
        samples: Optional[int] = typer.Option(
            None, "--samples", help="Number of samples", show_default=str(RenderSection.samples)
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
        """Render samples of the GAN at an explicit latent code"""
        latent = parse_floats(z, "--z")
        run_config = cls.load_config(ctx, config, {
            "paths.model": model,
            "paths.output": out,
            "render.samples": samples,
            "render.noise_seed": noise_seed,
            "render.padding": padding,
        })
        paths, render = run_config.paths, run_config.render
        output = paths.output or DEFAULT_OUTPUT
        cls.check(run_config, inputs=[("--model", paths.model)], outputs=[("--out", output)])

        gangan = read_model(paths.model)
        image = render_sample_figure(
            gangan, latent, n_samples=render.samples, noise_seed=render.noise_seed, padding=render.padding,
        )
        export_image(image, output)
        cls.success(f"Wrote {render.samples} samples at z={latent} to {output}")
