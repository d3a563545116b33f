"""
Optimizers.
"""

from .adam import AdamConfig, AdamState, adam_step

__all__ = ["AdamConfig", "AdamState", "adam_step"]
