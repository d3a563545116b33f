"""
CLI command registry for gan-gan.
"""

import inspect
from typing import Dict, Optional, Type

import typer

from .base import BaseCommand, with_error_handling
from .commands import __all__ as command_names
from . import commands

# Short aliases for the longer commands
COMMAND_ALIASES = {
    "fleet": "train-fleet",
    "meta": "train-meta",
    "info": "snapshots-info",
}


def _global_options(
    ctx: typer.Context,
    log_level: Optional[str] = typer.Option(
        None, "--log-level", help="Log level (debug, info, warning, error)", show_default="info"
    ),
    log_file: Optional[str] = typer.Option(None, "--log-file", help="Also write logs to this file"),
):
    """GAN-GAN: train GAN fleets, a GAN over their weights, and sample GANs from it."""
    ctx.obj = {"log_level": log_level, "log_file": log_file}


class CommandRegistry:
    """Registry for CLI commands in gan-gan."""

    def __init__(self):
        self.app = typer.Typer(
            help="GAN-GAN: train GAN fleets, a GAN over their weights, and sample GANs from it.",
            no_args_is_help=True,
            add_completion=False,
        )
        self.app.callback()(_global_options)
        self.commands: Dict[str, Type[BaseCommand]] = {}

    def register(self, command: Type[BaseCommand], name: Optional[str] = None, help: Optional[str] = None) -> None:
        """
        Register a BaseCommand subclass with the CLI application.

        The command's `_run_impl` signature defines its options; errors are
        mapped to exit codes by with_error_handling.
        """
        if not (inspect.isclass(command) and issubclass(command, BaseCommand)):
            raise TypeError("Command must be a BaseCommand subclass")
        name = (name or command.name).replace("_", "-")
        if not name:
            return
        self.app.command(name=name, help=help or command.help)(with_error_handling(command._run_impl))
        self.commands[name] = command

    def register_alias(self, alias: str, target_command: str) -> None:
        """Register `alias` as a hidden second name of `target_command`."""
        target = self.commands.get(target_command)
        if target is None:
            raise ValueError(f"Cannot alias unknown command '{target_command}'")
        self.app.command(name=alias, help=f"Alias for '{target_command}'", hidden=True)(
            with_error_handling(target._run_impl)
        )

    def discover_commands(self) -> None:
        """Register every command exported by the commands package, then the aliases."""
        for cmd_name in command_names:
            cmd = getattr(commands, cmd_name)
            if inspect.isclass(cmd) and issubclass(cmd, BaseCommand):
                self.register(cmd)
        for alias, target in COMMAND_ALIASES.items():
            if target in self.commands:
                self.register_alias(alias, target)

    def get_app(self) -> typer.Typer:
        return self.app
