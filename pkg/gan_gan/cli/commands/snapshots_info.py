"""
Snapshot store inspection.
"""

from typing import Any, List, Optional, Tuple

import typer

from ..base import BaseCommand
from ...data import read_store, store_stats
from ...data.snapshots import STORE_MAGIC, STORE_VERSION, SnapshotStore
from ...utils.config import PathsSection


def store_summary(store: SnapshotStore) -> List[Tuple[str, Any]]:
    """Header fields, counts and statistics as stable (key, value) pairs."""
    arch = store.arch
    pairs: List[Tuple[str, Any]] = [
        ("magic", STORE_MAGIC.decode("ascii")),
        ("version", STORE_VERSION),
        ("latent_dim", arch.latent_dim),
        ("hidden_dim", arch.hidden_dim),
        ("data_dim", arch.data_dim),
        ("param_count", arch.param_count),
        ("records", len(store)),
    ]
    gans = store.gans()
    pairs.append(("gans", len(gans)))
    if not gans:
        return pairs

    per_gan = {len(store.epochs_for(g)) for g in gans}
    if len(per_gan) == 1:
        pairs.append(("epochs_per_gan", per_gan.pop()))
    stats = store_stats(store)
    pairs.extend([
        ("min", f"{stats.min:.6f}"),
        ("max", f"{stats.max:.6f}"),
        ("mean_abs", f"{stats.mean_abs:.6f}"),
        ("saturated_fraction", f"{stats.saturated_fraction:.6f}"),
    ])
    return pairs


class SnapshotsInfoCommand(BaseCommand):
    """Print header fields, record counts and value statistics of a snapshot store"""

    name = "snapshots-info"
    help = "Describe a snapshot store (one 'key: value' per line)"

    @classmethod
    def _run_impl(
        cls,
        ctx: typer.Context,
        snapshots: Optional[str] = typer.Option(
            None, "--snapshots", help="Snapshot store", show_default=PathsSection.snapshots
        ),
        config: Optional[str] = typer.Option(None, "--config", help="YAML or key=value config file"),
    ):
        """Describe a snapshot store (one 'key: value' per line)"""
        run_config = cls.load_config(ctx, config, {"paths.snapshots": snapshots})
        cls.check(run_config, inputs=[("--snapshots", run_config.paths.snapshots)])
        cls.emit_pairs(store_summary(read_store(run_config.paths.snapshots)))
