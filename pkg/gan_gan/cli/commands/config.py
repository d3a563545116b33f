"""
Configuration inspection command.
"""

from typing import Optional

import typer

from ..base import BaseCommand
from ...utils.errors import ConfigurationError


class ConfigCommand(BaseCommand):
    """Show the merged run configuration"""

    name = "config"
    help = "Print the merged configuration (defaults < env < config file) and validate it"

    @classmethod
    def _run_impl(
        cls,
        ctx: typer.Context,
        config: Optional[str] = typer.Option(None, "--config", help="YAML or key=value config file"),
        save: Optional[str] = typer.Option(None, "--save", help="Also write the merged configuration as YAML"),
    ):
        """Print the merged configuration and validate it"""
        run_config = cls.load_config(ctx, config, {})
        for key, value in run_config.flat_items():
            if isinstance(value, list):
                value = ",".join(map(str, value))
            cls.emit(f"{key}: {value}")

        errors = run_config.validate()
        if errors:
            for error in errors:
                cls.error(error)
            raise ConfigurationError(f"{len(errors)} configuration error(s)")

        if save:
            run_config.save_to_file(save)
            cls.success(f"Configuration saved to {save}")
