"""Configuration management using Pydantic settings."""

from functools import lru_cache
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Engine settings with validation."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = Field(default="coinv")
    app_env: str = Field(default="development")

    # Windows on periodic covers
    default_window_radius: int = Field(default=2)
    max_window_radius: int = Field(default=6)
    stabilization_radius_limit: int = Field(default=4)
    default_cutoff: str = Field(default="domain")

    # Reports
    report_format: str = Field(default="record")
    output_dir: str = Field(default="reports")
    schema_version: str = Field(default="1.0")

    # Oracle cross-checks run on complexes up to this many cells
    oracle_cell_limit: int = Field(default=40)

    # Execution
    max_workers: int = Field(default=1)
    slow_operation_seconds: float = Field(default=1.0)

    # Logging
    log_level: str = Field(default="INFO")
    log_format: str = Field(default="text")
    log_file_path: Optional[str] = Field(default=None)
    log_max_size: int = Field(default=10485760)  # 10MB
    log_backup_count: int = Field(default=5)

    @field_validator("default_window_radius", "max_window_radius", "stabilization_radius_limit")
    @classmethod
    def validate_radius(cls, v):
        """Window radii start at 1."""
        if v < 1:
            raise ValueError("window radius must be at least 1")
        return v

    @field_validator("default_cutoff")
    @classmethod
    def validate_cutoff(cls, v):
        """Only the bundled cutoffs are known."""
        v = v.lower()
        if v not in ("domain", "split"):
            raise ValueError(f"unknown cutoff '{v}' (expected domain or split)")
        return v

    @field_validator("report_format")
    @classmethod
    def validate_report_format(cls, v):
        """Reports are records or their tabular projection."""
        v = v.lower()
        if v not in ("record", "table"):
            raise ValueError(f"unknown report format '{v}' (expected record or table)")
        return v

    @field_validator("max_workers")
    @classmethod
    def validate_workers(cls, v):
        if v < 1:
            raise ValueError("max_workers must be at least 1")
        return v

    @property
    def is_production(self) -> bool:
        """Check if running in production environment."""
        return self.app_env.lower() == "production"

    @property
    def is_development(self) -> bool:
        """Check if running in development environment."""
        return self.app_env.lower() == "development"


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


# Environment-specific settings
class DevelopmentSettings(Settings):
    """Development environment settings."""
    app_env: str = "development"
    log_level: str = "DEBUG"


class ProductionSettings(Settings):
    """Production environment settings."""
    app_env: str = "production"
    log_level: str = "INFO"
    log_format: str = "json"


class TestSettings(Settings):
    """Test environment settings."""
    app_env: str = "test"
    log_level: str = "WARNING"
    log_file_path: Optional[str] = None
    output_dir: str = "test-reports"


def get_settings_for_env(env: Optional[str] = None) -> Settings:
    """Get environment-specific settings."""
    env = env or Settings().app_env.lower()

    if env == "development":
        return DevelopmentSettings()
    elif env == "production":
        return ProductionSettings()
    elif env == "test":
        return TestSettings()
    else:
        return Settings()


# Export commonly used settings
settings = get_settings()
