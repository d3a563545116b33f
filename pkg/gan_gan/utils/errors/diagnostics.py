"""
Diagnostic information collection utilities.

This module handles collecting and logging diagnostic information
about the system and the numerical stack to help diagnose training failures.
"""

import os
import sys
import json
import logging
import platform
import traceback
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np

# Get logger
logger = logging.getLogger('gan_gan')


class DiagnosticCollector:
    """
    Collects diagnostic information about the system and application state.
    """

    @staticmethod
    def collect_system_info() -> Dict[str, Any]:
        """
        Collect information about the current system.

        Returns:
            Dictionary with system information
        """
        return {
            "python_version": sys.version,
            "platform": platform.platform(),
            "cpu_count": os.cpu_count(),
            "environment_variables": {
                k: v for k, v in os.environ.items()
                if k.startswith(("GANGAN_", "OMP_", "OPENBLAS_", "MKL_"))
            },
            "working_directory": os.getcwd(),
        }

    @staticmethod
    def collect_numpy_info() -> Dict[str, Any]:
        """Collect numpy version and floating point error settings."""
        return {
            "numpy_version": np.__version__,
            "float_error_state": np.geterr(),
        }

    @staticmethod
    def collect_stack_trace() -> List[str]:
        """
        Collect the current stack trace.

        Returns:
            List of stack frames
        """
        return traceback.format_stack()

    @classmethod
    def collect_all(cls) -> Dict[str, Any]:
        """
        Collect all available diagnostic information.

        Returns:
            Dictionary with all diagnostic information
        """
        return {
            "timestamp": datetime.now().isoformat(),
            **cls.collect_system_info(),
            **cls.collect_numpy_info(),
            "call_stack": cls.collect_stack_trace(),
        }


class DiagnosticLogger:
    """Saves diagnostic records next to the run's logs."""

    @staticmethod
    def save_to_file(info: Dict[str, Any], base_dir: Optional[str] = None) -> str:
        """
        Save diagnostic information to a JSON file.

        Args:
            info: Diagnostic information to save
            base_dir: Directory to write into (defaults to ./logs/diagnostics)

        Returns:
            Path to the saved file
        """
        log_dir = Path(base_dir) if base_dir else Path("logs") / "diagnostics"
        log_dir.mkdir(parents=True, exist_ok=True)

        filename = f"diagnostic_{datetime.now().strftime('%Y%m%d_%H%M%S_%f')}.json"
        filepath = log_dir / filename
        with open(filepath, "w") as f:
            json.dump(info, f, indent=2, default=str)

        return str(filepath)
