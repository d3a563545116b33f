#!/usr/bin/env python3
"""Entry point for the gan-gan CLI."""

import importlib.metadata
import sys
from typing import List, Optional

import click
from packaging import version
from rich.console import Console

from gan_gan.cli.app import create_app
from gan_gan.utils.errors import logger

console = Console(stderr=True)

# numpy.random.Generator.standard_normal(dtype=float32) and SeedSequence spawn keys
MIN_NUMPY_VERSION = "1.17.0"


def check_dependencies() -> bool:
    """Check that required dependencies are installed with compatible versions"""
    try:
        numpy_version = importlib.metadata.version("numpy")
        if version.parse(numpy_version) < version.parse(MIN_NUMPY_VERSION):
            console.print(f"[bold yellow]Warning:[/bold yellow] numpy {numpy_version} detected.")
            console.print(f"[bold yellow]Recommended:[/bold yellow] numpy {MIN_NUMPY_VERSION} or higher.")
            return False
        return True
    except Exception as e:
        logger.warning(f"Error checking dependencies: {e}")
        return False


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the CLI and return its exit code.

    0 success, 1 usage error, 2 data/format error, 3 numerical failure.
    """
    if not check_dependencies():
        logger.warning("Dependency check failed. Some features may not work correctly.")

    app = create_app()
    try:
        result = app(args=argv, prog_name="gan-gan", standalone_mode=False)
    except click.exceptions.Abort:
        console.print("Aborted.")
        return 1
    except click.ClickException as e:
        # click reports usage errors with exit code 2; ours is 1
        e.show()
        return 1
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    sys.exit(main())
