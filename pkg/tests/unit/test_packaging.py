"""
Unit tests for the package manifest.
"""

import inspect
import re
from concurrent.futures import Executor
from pathlib import Path

SETUP = Path(__file__).resolve().parents[2] / "setup.py"


def test_python_floor_supports_cancel_futures():
    match = re.search(r'python_requires=">=3\.(\d+)"', SETUP.read_text())
    assert match is not None
    # fleet shutdown passes cancel_futures, added in 3.9
    assert int(match.group(1)) >= 9
    assert "cancel_futures" in inspect.signature(Executor.shutdown).parameters
