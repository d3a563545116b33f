"""
Rendering of generator samples into grayscale figures.
"""

from .tiles import vector_to_tile, vectors_to_tiles, TILE_SIDE, TILE_PIXELS
from .grid import ImageGrid, compose_grid, grid_size, DEFAULT_PADDING
from .figures import (
    render_sweep_figure, render_epoch_figure, render_sample_figure, render_rows, fixed_noise,
    EPOCH_FIGURE_EPOCHS, EPOCH_FIGURE_SAMPLES, SWEEP_NOISE_COLS,
)
from .exporters import write_pgm, encode_pgm, export_image, ImageExporterFactory

__all__ = [
    "vector_to_tile", "vectors_to_tiles", "TILE_SIDE", "TILE_PIXELS",
    "ImageGrid", "compose_grid", "grid_size", "DEFAULT_PADDING",
    "render_sweep_figure", "render_epoch_figure", "render_sample_figure", "render_rows", "fixed_noise",
    "EPOCH_FIGURE_EPOCHS", "EPOCH_FIGURE_SAMPLES", "SWEEP_NOISE_COLS",
    "write_pgm", "encode_pgm", "export_image", "ImageExporterFactory",
]
