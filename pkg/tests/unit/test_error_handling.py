"""
Unit tests for the error hierarchy, the error handler and logging setup.
"""

import json
import logging
import pickle

import pytest

from gan_gan.utils.errors import (
    ErrorHandler, DiagnosticLogger, setup_logging,
    GanGanError, ConfigurationError, CliArgumentError, SnapshotFormatError, ShapeError,
    NonFiniteLossError, FleetTrainingError, MissingSnapshotError,
)


class TestExitCodes:
    @pytest.mark.parametrize("error, code", [
        (ConfigurationError("x"), 1),
        (CliArgumentError("x"), 1),
        (SnapshotFormatError("x"), 2),
        (ShapeError("x"), 2),
        (MissingSnapshotError("x"), 2),
        (NonFiniteLossError("x"), 3),
        (RuntimeError("x"), 1),
    ])
    def test_mapping(self, error, code):
        assert ErrorHandler.exit_code_for(error) == code

    def test_fleet_error_inherits_cause_code(self):
        assert FleetTrainingError(3, NonFiniteLossError("nan")).exit_code == 3
        assert FleetTrainingError(3, SnapshotFormatError("bad")).exit_code == 2
        assert FleetTrainingError(3, RuntimeError("boom")).exit_code == 1


class TestExceptions:
    def test_numerical_error_context_in_message(self):
        error = NonFiniteLossError("Generator loss is nan", network="generator", epoch=4, gan_index=2)
        assert str(error) == "Generator loss is nan (gan=2, network=generator, epoch=4)"

    def test_errors_survive_process_boundaries(self):
        error = FleetTrainingError(5, NonFiniteLossError("nan", network="discriminator", epoch=2))
        restored = pickle.loads(pickle.dumps(error))
        assert restored.gan_index == 5
        assert restored.cause.network == "discriminator"
        assert restored.cause.epoch == 2
        assert restored.exit_code == 3
        assert "GAN 5 failed" in str(restored)

    def test_shape_error_is_value_error(self):
        assert issubclass(ShapeError, ValueError)
        assert issubclass(ShapeError, GanGanError)


class TestErrorHandler:
    def test_handle_exception_info(self):
        try:
            raise SnapshotFormatError("bad magic")
        except SnapshotFormatError as e:
            info = ErrorHandler.handle_exception(e, context={"command": "sweep"})
        assert info["error_type"] == "SnapshotFormatError"
        assert info["error_message"] == "bad magic"
        assert info["exit_code"] == 2
        assert info["context"] == {"command": "sweep"}
        assert info["caller"]["function"] == "test_handle_exception_info"
        assert "diagnostics" not in info

    def test_numerical_failures_save_diagnostics(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        error = FleetTrainingError(0, NonFiniteLossError("nan", network="generator"))
        info = ErrorHandler.handle_exception(error)
        assert "log_file" in info
        saved = json.loads(open(info["log_file"]).read())
        assert saved["exit_code"] == 3
        assert saved["failure"] == {"gan_index": 0, "network": "generator", "epoch": None}
        assert "numpy_version" in saved["diagnostics"]

    def test_diagnostic_logger_directory(self, tmp_path):
        path = DiagnosticLogger.save_to_file({"a": 1}, base_dir=str(tmp_path / "diag"))
        assert json.loads(open(path).read()) == {"a": 1}


class TestSetupLogging:
    def test_stderr_handler_and_level(self):
        logger = setup_logging("debug")
        assert logger.level == logging.DEBUG
        assert len(logger.handlers) == 1
        assert logger.propagate is False

    def test_reconfigure_replaces_handlers(self, tmp_path):
        log_file = tmp_path / "logs" / "run.log"
        setup_logging("info", str(log_file))
        logger = setup_logging("warning", str(log_file))
        assert len(logger.handlers) == 2
        logger.warning("written")
        for handler in logger.handlers:
            handler.flush()
        assert "written" in log_file.read_text()

    def test_invalid_level(self):
        with pytest.raises(ValueError):
            setup_logging("loud")
