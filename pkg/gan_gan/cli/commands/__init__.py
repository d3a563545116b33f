"""
CLI command implementations for gan-gan.
"""

from .train_fleet import TrainFleetCommand
from .train_meta import TrainMetaCommand
from .sweep import SweepCommand
from .epochs_figure import EpochsFigureCommand
from .snapshots_info import SnapshotsInfoCommand
from .sample import SampleCommand
from .config import ConfigCommand

__all__ = [
    'TrainFleetCommand',
    'TrainMetaCommand',
    'SweepCommand',
    'EpochsFigureCommand',
    'SnapshotsInfoCommand',
    'SampleCommand',
    'ConfigCommand',
]
