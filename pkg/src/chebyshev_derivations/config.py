"""Configuration management for chebyshev-derivations."""

from pathlib import Path

import yaml
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Main application settings (environment prefix ``CHEB_``)."""

    model_config = SettingsConfigDict(
        env_prefix="CHEB_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    log_level: str = Field(default="WARNING")
    log_json: bool = Field(default=False, description="Emit structured logs as JSON lines")

    max_n: int = Field(default=64, ge=1, description="Cap on any n or order accepted by the CLI")
    default_n_to: int = Field(default=12, ge=1, description="Default upper bound of verify sweeps")
    workers: int = Field(default=4, ge=1, description="Concurrent verification jobs")
    console_width: int = Field(default=160, ge=40, description="Fixed width for rich tables")

    @classmethod
    def from_yaml(cls, path: Path) -> "Settings":
        """Load settings from YAML file."""
        with open(path) as f:
            data = yaml.safe_load(f) or {}
        return cls(**data)

    def to_yaml(self, path: Path) -> None:
        """Save settings to YAML file."""
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            yaml.dump(self.model_dump(), f, default_flow_style=False)


# Global settings instance
_settings: Settings | None = None


def get_settings() -> Settings:
    """Get or create global settings instance."""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reload_settings(path: Path | None = None) -> Settings:
    """Reload settings from environment, or from a YAML file when given."""
    global _settings
    _settings = Settings.from_yaml(path) if path else Settings()
    return _settings
