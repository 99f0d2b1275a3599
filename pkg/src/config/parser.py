"""Configuration loading from .env files and the environment."""

import os
from dataclasses import dataclass
from pathlib import Path

from dotenv import dotenv_values

DEFAULT_ENUMERATION_BUDGET = 2**24
DEFAULT_TRANSFORM_BUDGET = 2**16
DEFAULT_SERIES_BUDGET = 2**24
DEFAULT_LOG_LEVEL = "WARNING"

_KEYS = ("MWLAB_BUDGET", "MWLAB_TRANSFORM_BUDGET", "MWLAB_SERIES_BUDGET", "MWLAB_LOG_LEVEL")
_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class ValidationError(Exception):
    """Configuration validation error."""

    def __init__(self, message: str, field: str | None = None):
        self.message = message
        self.field = field
        super().__init__(self.message)


class ValidationResult:
    """Result of configuration validation."""

    def __init__(
        self,
        valid: bool,
        errors: list[str] | None = None,
        warnings: list[str] | None = None,
    ):
        self.valid = valid
        self.errors: list[str] = errors if errors is not None else []
        self.warnings: list[str] = warnings if warnings is not None else []


@dataclass(frozen=True)
class Settings:
    """Resolved runtime settings."""

    enumeration_budget: int = DEFAULT_ENUMERATION_BUDGET
    transform_budget: int = DEFAULT_TRANSFORM_BUDGET
    series_budget: int = DEFAULT_SERIES_BUDGET
    log_level: str = DEFAULT_LOG_LEVEL


class ConfigurationParser:
    """Parser for mwlab settings.

    Values come from an optional ``.env`` file; ``MWLAB_*`` variables in the
    process environment take precedence over the file.
    """

    def __init__(self, env_path: Path | None = None):
        """Initialize parser with optional .env file path.

        Args:
            env_path: Path to .env file. If None, looks in current directory.
        """
        self.env_path = env_path or Path.cwd() / ".env"
        self.config: dict[str, str] = {}

    def load(self) -> dict[str, str]:
        """Load the .env file (if present) and overlay the environment.

        Returns:
            Dictionary of configuration key-value pairs.
        """
        self.config = {}

        if self.env_path.exists():
            for key, value in dotenv_values(self.env_path).items():
                if value is not None:
                    self.config[key] = value.strip()

        for key in _KEYS:
            if key in os.environ:
                self.config[key] = os.environ[key].strip()

        return self.config

    def get(self, key: str, default: str | None = None) -> str | None:
        """Get configuration value by key."""
        return self.config.get(key, default)

    def get_int(self, key: str, default: int = 0) -> int:
        """Get integer configuration value.

        Accepts plain integers and powers written as ``2**k``.

        Args:
            key: Configuration key.
            default: Default value if key not found or invalid.

        Returns:
            Integer value.
        """
        try:
            return self._parse_int(self.config[key])
        except (KeyError, ValidationError):
            return default

    def _parse_int(self, raw: str, field: str | None = None) -> int:
        """Parse ``123`` or ``2**20``.

        Raises:
            ValidationError: If the format is invalid.
        """
        raw = raw.strip()
        if raw.isdigit():
            return int(raw)
        base, sep, exponent = raw.partition("**")
        if sep and base.strip().isdigit() and exponent.strip().isdigit():
            return int(base) ** int(exponent)
        raise ValidationError(f"Invalid integer value for {field or 'setting'}: {raw}", field)

    def validate(self) -> ValidationResult:
        """Validate loaded configuration values.

        Returns:
            ValidationResult with errors and warnings.
        """
        errors: list[str] = []
        warnings: list[str] = []

        for key in ("MWLAB_BUDGET", "MWLAB_TRANSFORM_BUDGET", "MWLAB_SERIES_BUDGET"):
            if key not in self.config:
                continue
            try:
                value = self._parse_int(self.config[key], key)
                if value < 1:
                    errors.append(f"{key} must be at least 1, got: {value}")
                elif value > 2**32:
                    warnings.append(f"{key}={value} allows enumerations that may exhaust memory")
            except ValidationError as e:
                errors.append(e.message)

        if "MWLAB_LOG_LEVEL" in self.config:
            level = self.config["MWLAB_LOG_LEVEL"].upper()
            if level not in _LOG_LEVELS:
                errors.append(f"MWLAB_LOG_LEVEL must be one of {', '.join(_LOG_LEVELS)}, got: {level}")

        known = set(_KEYS)
        for key in self.config:
            if key.startswith("MWLAB_") and key not in known:
                warnings.append(f"Unknown setting ignored: {key}")

        return ValidationResult(len(errors) == 0, errors, warnings)

    def settings(self) -> Settings:
        """Build resolved settings from loaded values."""
        return Settings(
            enumeration_budget=self.get_int("MWLAB_BUDGET", DEFAULT_ENUMERATION_BUDGET),
            transform_budget=self.get_int("MWLAB_TRANSFORM_BUDGET", DEFAULT_TRANSFORM_BUDGET),
            series_budget=self.get_int("MWLAB_SERIES_BUDGET", DEFAULT_SERIES_BUDGET),
            log_level=(self.get("MWLAB_LOG_LEVEL") or DEFAULT_LOG_LEVEL).upper(),
        )


def load_settings(env_path: Path | None = None) -> Settings:
    """Load settings from .env file and environment.

    Args:
        env_path: Path to .env file. If None, uses current directory.

    Returns:
        Resolved settings.
    """
    parser = ConfigurationParser(env_path)
    parser.load()
    return parser.settings()
