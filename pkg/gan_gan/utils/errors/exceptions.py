"""
Custom exception classes for gan-gan.

This module defines all the custom exception types used throughout the application.
Every class carries the process exit code the CLI reports for it:
1 for usage errors, 2 for data/format errors, 3 for numerical failures.
"""

from typing import Optional


class GanGanError(Exception):
    """Base class for all gan-gan exceptions"""
    exit_code: int = 1


class ConfigurationError(GanGanError):
    """Exception raised when there is an issue with configuration"""
    exit_code = 1


class CliArgumentError(ConfigurationError):
    """Exception raised when CLI arguments are invalid"""
    exit_code = 1


class LatentDimensionError(GanGanError, ValueError):
    """Exception raised when a latent vector does not match the model's latent space"""
    exit_code = 1


class DataFormatError(GanGanError):
    """Base class for malformed or inconsistent input files"""
    exit_code = 2


class MnistFormatError(DataFormatError):
    """Exception raised when an IDX image file cannot be parsed"""
    pass


class IdxMagicError(MnistFormatError):
    """The IDX header does not start with the image magic number"""
    pass


class IdxTruncatedError(MnistFormatError):
    """The IDX payload is shorter than its header declares"""
    pass


class IdxDimensionError(MnistFormatError):
    """The IDX images are not 28x28"""
    pass


class SnapshotFormatError(DataFormatError):
    """Exception raised when a GGAN snapshot store is malformed"""
    pass


class ModelFormatError(DataFormatError):
    """Exception raised when a GGMN model file is malformed"""
    pass


class MissingSnapshotError(DataFormatError, KeyError):
    """Exception raised when a (gan_index, epoch) record is not in the store"""

    def __str__(self) -> str:
        # KeyError quotes its argument; keep the message readable
        return str(self.args[0]) if self.args else ""


class ShapeError(DataFormatError, ValueError):
    """Exception raised on a dimension mismatch between arrays and their network layout"""
    pass


class ArchitectureMismatchError(DataFormatError):
    """Exception raised when a store or model does not match the requested architecture"""
    pass


class NumericalError(GanGanError, ArithmeticError):
    """
    Base class for NaN/Inf failures during training.

    Carries the network ("generator" or "discriminator"), the epoch and the
    GAN index when they are known at the raise site.
    """
    exit_code = 3

    def __init__(
        self,
        message: str,
        network: Optional[str] = None,
        epoch: Optional[int] = None,
        gan_index: Optional[int] = None,
    ):
        self.network = network
        self.epoch = epoch
        self.gan_index = gan_index
        super().__init__(message)

    def __str__(self) -> str:
        where = [
            f"{key}={value}"
            for key, value in (("gan", self.gan_index), ("network", self.network), ("epoch", self.epoch))
            if value is not None
        ]
        message = super().__str__()
        return f"{message} ({', '.join(where)})" if where else message

    def __reduce__(self):
        # fleet workers send these across process boundaries
        return (type(self), (self.args[0], self.network, self.epoch, self.gan_index))


class NonFiniteLossError(NumericalError):
    """A batch loss evaluated to NaN or Inf"""
    pass


class NonFiniteGradientError(NumericalError):
    """A gradient handed to the optimizer contains NaN or Inf"""
    pass


class NonFiniteInputError(NumericalError):
    """A forward pass received NaN or Inf inputs"""
    pass


class FleetTrainingError(GanGanError):
    """
    Raised when one member of a GAN fleet fails.

    The fleet aborts on the first failure; the exit code is inherited from the cause.
    """

    def __init__(self, gan_index: int, cause: BaseException):
        self.gan_index = gan_index
        self.cause = cause
        super().__init__(f"GAN {gan_index} failed: {cause}")

    @property
    def exit_code(self) -> int:  # type: ignore[override]
        return getattr(self.cause, "exit_code", 1)

    def __reduce__(self):
        return (type(self), (self.gan_index, self.cause))
