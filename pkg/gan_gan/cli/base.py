"""
Base command classes for the gan-gan CLI.
"""

import functools
from abc import ABC, abstractmethod
from typing import Any, ClassVar, Dict, Iterable, List, Mapping, Optional, Tuple

import click
import typer
from rich.console import Console
from rich.markup import escape

from ..utils.config import RunConfig
from ..utils.errors import ErrorHandler, CliArgumentError, setup_logging, logger

# Human-facing messages go to stderr; stdout carries machine-parsable lines only
console = Console(stderr=True)


def with_error_handling(func):
    """Decorator to add consistent error handling and exit codes to commands"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (click.exceptions.Exit, click.ClickException, click.exceptions.Abort):
            raise
        except Exception as e:
            error_info = ErrorHandler.handle_exception(
                e,
                context={"command": getattr(func, "__qualname__", func.__name__)},
            )
            console.print(f"[bold red]Error:[/bold red] {escape(error_info['error_message'])}")

            if isinstance(e, CliArgumentError):
                ctx = click.get_current_context(silent=True)
                if ctx is not None:
                    console.print(escape(ctx.get_usage()))
                    console.print(f"Try '{ctx.command_path} --help' for help.")

            if "log_file" in error_info:
                console.print(f"[dim]Detailed error information saved to {error_info['log_file']}[/dim]")

            raise typer.Exit(code=error_info["exit_code"])

    return wrapper


class BaseCommand(ABC):
    """Base class for all CLI commands"""

    name: ClassVar[str] = ""
    help: ClassVar[str] = ""

    @classmethod
    def run(cls, **kwargs) -> Any:
        """Run the command"""
        return cls._run_impl(**kwargs)

    @classmethod
    @abstractmethod
    def _run_impl(cls, **kwargs) -> Any:
        """Implementation of the run method"""
        pass

    @staticmethod
    def load_config(
        ctx: Optional[typer.Context],
        config_file: Optional[str],
        overrides: Mapping[str, Any],
    ) -> RunConfig:
        """
        Merge defaults, environment, config file and flags, then configure logging.

        Global --log-level/--log-file (stored on the context) count as flags.
        """
        merged: Dict[str, Any] = dict(overrides)
        if ctx is not None and isinstance(ctx.obj, dict):
            merged.setdefault("app.log_level", ctx.obj.get("log_level"))
            merged.setdefault("app.log_file", ctx.obj.get("log_file"))
        config = RunConfig.load(config_file, merged)
        try:
            setup_logging(config.app.log_level, config.app.log_file)
        except ValueError as e:
            raise CliArgumentError(str(e)) from e
        logger.debug(f"Configuration sources: {config.sources or ['defaults']}")
        return config

    @staticmethod
    def check(
        config: RunConfig,
        inputs: Iterable[Tuple[str, Optional[str]]] = (),
        outputs: Iterable[Tuple[str, Optional[str]]] = (),
    ) -> None:
        config.check(inputs, outputs)

    @staticmethod
    def emit(line: str) -> None:
        """Write one machine-parsable line to stdout"""
        typer.echo(line)

    @staticmethod
    def emit_pairs(pairs: Iterable[Tuple[str, Any]]) -> None:
        for key, value in pairs:
            typer.echo(f"{key}: {value}")

    @staticmethod
    def success(message: str) -> None:
        """Display a success message"""
        console.print(f"[bold green]{escape(message)}[/bold green]")

    @staticmethod
    def error(message: str) -> None:
        """Display an error message"""
        console.print(f"[bold red]Error:[/bold red] {escape(message)}")

    @staticmethod
    def info(message: str) -> None:
        """Display an info message"""
        console.print(f"[blue]{escape(message)}[/blue]")

    @staticmethod
    def warning(message: str) -> None:
        """Display a warning message"""
        console.print(f"[bold yellow]Warning:[/bold yellow] {escape(message)}")


def parse_range(text: str) -> Tuple[float, float]:
    """Parse 'a:b' into (a, b); a == b is rejected."""
    low, sep, high = text.partition(":")
    if not sep:
        raise CliArgumentError(f"Invalid --range '{text}': expected MIN:MAX")
    try:
        bounds = float(low), float(high)
    except ValueError:
        raise CliArgumentError(f"Invalid --range '{text}': bounds must be numbers") from None
    if bounds[0] == bounds[1]:
        raise CliArgumentError(f"Invalid --range '{text}': the range is degenerate")
    return bounds


def parse_floats(text: str, option: str) -> List[float]:
    """Parse a comma-separated list of floats."""
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise CliArgumentError(f"Invalid {option} '{text}': expected comma-separated numbers") from None
    if not values:
        raise CliArgumentError(f"{option} needs at least one value")
    return values


def parse_ints(text: str, option: str) -> List[int]:
    """Parse a comma-separated list of integers."""
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise CliArgumentError(f"Invalid {option} '{text}': expected comma-separated integers") from None
    if not values:
        raise CliArgumentError(f"{option} needs at least one value")
    return values

