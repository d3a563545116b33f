"""
Error handling components.

This module provides the central error handling facilities for the application,
including the main ErrorHandler class and information extraction.
"""

import inspect
import logging
from datetime import datetime
from typing import Any, Dict, Optional

from .diagnostics import DiagnosticCollector, DiagnosticLogger
from .exceptions import GanGanError, NumericalError, FleetTrainingError

# Get logger
logger = logging.getLogger('gan_gan')


class ErrorInformationExtractor:
    """
    Extracts information from exceptions.
    """

    @staticmethod
    def extract_error_info(e: BaseException, context: Dict[str, Any]) -> Dict[str, Any]:
        """
        Extract information from an exception.

        Args:
            e: The exception to extract information from
            context: Additional context about where/why the exception occurred

        Returns:
            Dictionary with error information
        """
        error_info = {
            "error_type": type(e).__name__,
            "error_message": str(e),
            "exit_code": ErrorHandler.exit_code_for(e),
            "timestamp": datetime.now().isoformat(),
            "context": context,
        }

        # Innermost frame of the traceback is where the error was raised
        tb = e.__traceback__
        while tb is not None and tb.tb_next is not None:
            tb = tb.tb_next
        if tb is not None:
            error_info["caller"] = {
                "file": tb.tb_frame.f_code.co_filename,
                "function": tb.tb_frame.f_code.co_name,
                "line": tb.tb_lineno,
            }
        else:
            frame = inspect.currentframe()
            caller = frame.f_back.f_back if frame and frame.f_back else None
            if caller:
                error_info["caller"] = {
                    "file": caller.f_code.co_filename,
                    "function": caller.f_code.co_name,
                    "line": caller.f_lineno,
                }

        return error_info


class ErrorHandler:
    """Central error handling facility for the application."""

    @staticmethod
    def exit_code_for(e: BaseException) -> int:
        """Map an exception to the CLI exit code (1 usage, 2 data, 3 numerical)."""
        if isinstance(e, GanGanError):
            return e.exit_code
        return 1

    @classmethod
    def handle_exception(
        cls,
        e: BaseException,
        context: Optional[Dict[str, Any]] = None,
        collect_diagnostics: Optional[bool] = None,
    ) -> Dict[str, Any]:
        """
        Handle an exception in a standard way across the application.

        Args:
            e: The exception to handle
            context: Additional context about where/why the exception occurred
            collect_diagnostics: Whether to save a diagnostic record; by default
                only numerical failures are recorded

        Returns:
            Dictionary with error information
        """
        context = context or {}
        error_info = ErrorInformationExtractor.extract_error_info(e, context)

        root = e.cause if isinstance(e, FleetTrainingError) else e
        if isinstance(root, NumericalError):
            error_info["failure"] = {
                "gan_index": e.gan_index if isinstance(e, FleetTrainingError) else root.gan_index,
                "network": root.network,
                "epoch": root.epoch,
            }
        if collect_diagnostics is None:
            collect_diagnostics = isinstance(root, NumericalError)

        if collect_diagnostics:
            error_info["diagnostics"] = DiagnosticCollector.collect_all()
            try:
                log_file = DiagnosticLogger.save_to_file(error_info)
                error_info["log_file"] = log_file
                logger.error(f"Error details saved to {log_file}")
            except OSError as log_error:
                logger.error(f"Failed to save diagnostic information: {log_error}")

        logger.error(
            f"Error in {error_info.get('caller', {}).get('function', 'unknown')}: "
            f"{error_info['error_type']}: {error_info['error_message']}"
        )
        if not isinstance(e, GanGanError):
            logger.debug("Unexpected exception", exc_info=e)

        return error_info
