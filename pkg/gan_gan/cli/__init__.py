"""
Command-line interface for gan-gan.
"""

from .app import create_app
from .base import BaseCommand, with_error_handling

__all__ = ["create_app", "BaseCommand", "with_error_handling"]
