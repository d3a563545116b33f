"""
Configuration management for gan-gan.

RunConfig merges, from lowest to highest priority:
1. Default values (the full-size run)
2. Environment variables (GANGAN_MNIST_DIR, GANGAN_LOG_LEVEL)
3. A configuration file (--config or GANGAN_CONFIG): YAML with nested
   sections, or plain key=value lines with dotted keys (fleet.epochs=5)
4. Command-line flags
"""

import os
import typing
from dataclasses import dataclass, field, asdict, fields
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple, Type, TypeVar, Union

import yaml
from dotenv import dotenv_values

from .errors import logger, ConfigurationError
from .file_utils import ensure_writable_parent

T = TypeVar('T', bound='ConfigSection')

CONFIG_ENV = "GANGAN_CONFIG"
LOG_LEVEL_ENV = "GANGAN_LOG_LEVEL"
VALID_LOG_LEVELS = ["debug", "info", "warning", "error", "critical"]
SEED_LIMIT = 2 ** 64


def _coerce(key: str, raw: Any, hint: Any) -> Any:
    """Convert a config value (possibly a string from a key=value file) to the field's type."""
    origin = typing.get_origin(hint)
    args = [a for a in typing.get_args(hint) if a is not type(None)]

    if origin is Union:
        if raw is None or (isinstance(raw, str) and raw.strip().lower() in ("", "none", "null")):
            return None
        return _coerce(key, raw, args[0])

    try:
        if origin in (list, List):
            items = raw.split(",") if isinstance(raw, str) else list(raw)
            return [_coerce(key, item, args[0]) for item in items if str(item).strip()]
        if hint is bool:
            if isinstance(raw, str):
                return raw.strip().lower() in ("true", "1", "yes")
            return bool(raw)
        if hint is int:
            if isinstance(raw, bool) or (isinstance(raw, float) and not raw.is_integer()):
                raise ValueError(raw)
            return int(raw.strip()) if isinstance(raw, str) else int(raw)
        if hint is float:
            return float(raw)
        if hint is str:
            return str(raw)
    except (TypeError, ValueError, AttributeError):
        raise ConfigurationError(f"Invalid value for {key}: {raw!r}") from None
    return raw


@dataclass
class ConfigSection:
    """Base class for configuration sections"""

    # Name under which the section appears in files and dotted keys
    section: typing.ClassVar[str] = ""

    @classmethod
    def field_types(cls) -> Dict[str, Any]:
        return typing.get_type_hints(cls)

    @classmethod
    def from_dict(cls: Type[T], data: Mapping[str, Any]) -> T:
        """Create a configuration section from a dictionary"""
        instance = cls()
        instance.update(data)
        return instance

    def update(self, data: Mapping[str, Any]) -> None:
        """Set fields from `data`, coercing types; unknown keys are warned about"""
        hints = self.field_types()
        names = {f.name for f in fields(self)}
        for key, value in data.items():
            if key not in names:
                logger.warning(f"Unknown configuration key: {self.section}.{key}")
                continue
            setattr(self, key, _coerce(f"{self.section}.{key}", value, hints[key]))

    def to_dict(self) -> Dict[str, Any]:
        """Convert the configuration section to a dictionary"""
        return asdict(self)

    def validate(self) -> List[str]:
        return []


def _positive(errors: List[str], section: str, **values: Optional[Union[int, float]]) -> None:
    for name, value in values.items():
        if value is not None and value <= 0:
            errors.append(f"{section}.{name} must be positive, got {value}")


def _seed(errors: List[str], section: str, name: str, value: int) -> None:
    if not 0 <= value < SEED_LIMIT:
        errors.append(f"{section}.{name} must be a 64-bit unsigned integer, got {value}")


@dataclass
class FleetSection(ConfigSection):
    """Fleet of MNIST GANs"""
    section: typing.ClassVar[str] = "fleet"

    num_gans: int = 35
    epochs: int = 100
    batch_size: int = 128
    lr: float = 0.0002
    latent_dim: int = 64
    hidden_dim: int = 64
    seed: int = 0
    workers: int = 1
    subset: Optional[int] = None

    def validate(self) -> List[str]:
        errors: List[str] = []
        _positive(
            errors, self.section,
            num_gans=self.num_gans, epochs=self.epochs, batch_size=self.batch_size, lr=self.lr,
            latent_dim=self.latent_dim, hidden_dim=self.hidden_dim, workers=self.workers, subset=self.subset,
        )
        _seed(errors, self.section, "seed", self.seed)
        return errors


@dataclass
class MetaSection(ConfigSection):
    """GAN-GAN over fleet snapshots"""
    section: typing.ClassVar[str] = "meta"

    epochs: int = 250
    batch_size: int = 32
    latent_dim: int = 1
    gen_hidden: int = 64
    disc_hidden: int = 8
    lr: float = 0.0002
    seed: int = 0

    def validate(self) -> List[str]:
        errors: List[str] = []
        _positive(
            errors, self.section,
            epochs=self.epochs, batch_size=self.batch_size, latent_dim=self.latent_dim,
            gen_hidden=self.gen_hidden, disc_hidden=self.disc_hidden, lr=self.lr,
        )
        _seed(errors, self.section, "seed", self.seed)
        return errors


@dataclass
class RenderSection(ConfigSection):
    """Figure rendering"""
    section: typing.ClassVar[str] = "render"

    rows: int = 32
    cols: int = 40
    z_min: float = -2.0
    z_max: float = 2.0
    padding: int = 2
    noise_seed: int = 0
    samples: int = 16
    epochs: List[int] = field(default_factory=lambda: [1, 2, 10, 25, 27, 30, 32, 35, 40, 49])

    def validate(self) -> List[str]:
        errors: List[str] = []
        _positive(errors, self.section, rows=self.rows, cols=self.cols, samples=self.samples)
        if self.padding < 0:
            errors.append(f"render.padding must be >= 0, got {self.padding}")
        if self.z_min == self.z_max:
            errors.append(f"render range {self.z_min}:{self.z_max} is degenerate")
        if not self.epochs:
            errors.append("render.epochs must list at least one epoch")
        elif min(self.epochs) < 1:
            errors.append(f"render.epochs must all be >= 1, got {self.epochs}")
        _seed(errors, self.section, "noise_seed", self.noise_seed)
        return errors


@dataclass
class PathsSection(ConfigSection):
    """Input and output files"""
    section: typing.ClassVar[str] = "paths"

    mnist_images: Optional[str] = None
    snapshots: str = "snapshots.ggan"
    model: str = "gangan.ggmn"
    output: Optional[str] = None


@dataclass
class AppSection(ConfigSection):
    """General application configuration"""
    section: typing.ClassVar[str] = "app"

    log_level: str = "info"
    log_file: Optional[str] = None

    def validate(self) -> List[str]:
        if self.log_level.lower() not in VALID_LOG_LEVELS:
            return [f"Invalid log level: {self.log_level}. Must be one of {VALID_LOG_LEVELS}"]
        return []


@dataclass
class RunConfig:
    """
    Merged configuration of one CLI invocation.

    Sections are addressed by dotted keys, e.g. "fleet.epochs" or "paths.model".
    """
    fleet: FleetSection = field(default_factory=FleetSection)
    meta: MetaSection = field(default_factory=MetaSection)
    render: RenderSection = field(default_factory=RenderSection)
    paths: PathsSection = field(default_factory=PathsSection)
    app: AppSection = field(default_factory=AppSection)

    _sources: List[str] = field(default_factory=list, repr=False)

    SECTIONS: typing.ClassVar[Tuple[str, ...]] = ("fleet", "meta", "render", "paths", "app")

    @classmethod
    def load(
        cls,
        config_file: Optional[Union[str, os.PathLike]] = None,
        overrides: Optional[Mapping[str, Any]] = None,
        environ: Optional[Mapping[str, str]] = None,
    ) -> "RunConfig":
        """
        Build a RunConfig from defaults, environment, config file and overrides.

        Args:
            config_file: Explicit config file; falls back to $GANGAN_CONFIG
            overrides: Dotted keys from command-line flags; None values are ignored
            environ: Environment mapping (os.environ by default)
        """
        environ = os.environ if environ is None else environ
        config = cls()
        config.load_from_env(environ)
        config_file = config_file or environ.get(CONFIG_ENV)
        if config_file:
            config.load_from_file(config_file)
        if overrides:
            config.apply_overrides(overrides)
        return config

    def load_from_env(self, environ: Mapping[str, str]) -> None:
        """Load configuration from environment variables"""
        from ..data.mnist import MNIST_DIR_ENV, find_mnist_images

        if environ.get(LOG_LEVEL_ENV):
            self.app.log_level = environ[LOG_LEVEL_ENV]
            self._sources.append(LOG_LEVEL_ENV)

        if environ.get(MNIST_DIR_ENV):
            found = find_mnist_images(environ[MNIST_DIR_ENV])
            if found is not None:
                self.paths.mnist_images = str(found)
                self._sources.append(MNIST_DIR_ENV)
            else:
                logger.warning(f"{MNIST_DIR_ENV}={environ[MNIST_DIR_ENV]} holds no MNIST training images")

    def load_from_file(self, path: Union[str, os.PathLike]) -> None:
        """
        Load a YAML (.yaml/.yml) or key=value configuration file.

        Raises:
            ConfigurationError: the file is missing or cannot be parsed
        """
        path = Path(path)
        if not path.exists():
            raise ConfigurationError(f"Configuration file not found: {path}")

        if path.suffix.lower() in (".yaml", ".yml"):
            try:
                with open(path, "r") as f:
                    data = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ConfigurationError(f"YAML parsing error in config file {path}: {e}") from e
            if not isinstance(data, dict):
                raise ConfigurationError(f"Config file {path} must contain a mapping of sections")
            self._update_from_dict(data)
        else:
            self.apply_overrides({k: v for k, v in dotenv_values(path).items() if v is not None})

        self._sources.append(str(path))
        logger.info(f"Loaded configuration from {path}")

    def _update_from_dict(self, data: Mapping[str, Any]) -> None:
        for key, value in data.items():
            if key not in self.SECTIONS:
                logger.warning(f"Unknown configuration section: {key}")
                continue
            if not isinstance(value, dict):
                raise ConfigurationError(f"Configuration section '{key}' must be a mapping")
            getattr(self, key).update(value)

    def apply_overrides(self, overrides: Mapping[str, Any]) -> None:
        """Set dotted keys ("fleet.epochs": 5); None values are skipped."""
        for dotted, value in overrides.items():
            if value is None:
                continue
            section, _, name = dotted.partition(".")
            if section not in self.SECTIONS or not name:
                logger.warning(f"Unknown configuration key: {dotted}")
                continue
            getattr(self, section).update({name: value})

    def validate(self) -> List[str]:
        """
        Validate the configuration.

        Returns:
            List of validation error messages, empty if valid
        """
        errors: List[str] = []
        for name in self.SECTIONS:
            errors.extend(getattr(self, name).validate())
        return errors

    def check(
        self,
        inputs: Iterable[Tuple[str, Optional[str]]] = (),
        outputs: Iterable[Tuple[str, Optional[str]]] = (),
    ) -> None:
        """
        Validate sections plus the given (label, path) inputs and outputs.

        Raises:
            ConfigurationError: listing every problem found
        """
        errors = self.validate()
        for label, path in inputs:
            if not path:
                errors.append(f"{label} is required")
            elif not Path(path).exists():
                errors.append(f"{label} does not exist: {path}")
        for label, path in outputs:
            if path and not ensure_writable_parent(path):
                errors.append(f"{label} is not writable: {path}")
        if errors:
            raise ConfigurationError("; ".join(errors))

    def to_dict(self) -> Dict[str, Any]:
        return {name: getattr(self, name).to_dict() for name in self.SECTIONS}

    def flat_items(self) -> List[Tuple[str, Any]]:
        """(dotted key, value) pairs in section order."""
        return [
            (f"{section}.{key}", value)
            for section, values in self.to_dict().items()
            for key, value in values.items()
        ]

    @property
    def sources(self) -> List[str]:
        return list(self._sources)

    def save_to_file(self, path: Union[str, Path]) -> None:
        """Save the configuration as YAML."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            yaml.dump(self.to_dict(), f, default_flow_style=False, sort_keys=False)

    def gan_config(self):
        """The fleet GanConfig for this run."""
        from ..optim import AdamConfig
        from ..training import GanConfig

        return GanConfig(
            latent_dim=self.fleet.latent_dim,
            hidden_dim=self.fleet.hidden_dim,
            epochs=self.fleet.epochs,
            batch_size=self.fleet.batch_size,
            adam=AdamConfig(lr=self.fleet.lr),
            seed=self.fleet.seed,
        )

    def gangan_config(self, data_dim: int):
        """The GanGanConfig for a store whose param_count is `data_dim`."""
        from ..meta import GanGanConfig
        from ..optim import AdamConfig

        return GanGanConfig(
            latent_dim=self.meta.latent_dim,
            gen_hidden=self.meta.gen_hidden,
            disc_hidden=self.meta.disc_hidden,
            data_dim=data_dim,
            epochs=self.meta.epochs,
            batch_size=self.meta.batch_size,
            adam=AdamConfig(lr=self.meta.lr),
            seed=self.meta.seed,
        )
