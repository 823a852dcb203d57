"""Tests for settings."""

import pytest
from pydantic import ValidationError

from src.config import (
    DevelopmentSettings,
    ProductionSettings,
    Settings,
    TestSettings,
    get_settings_for_env,
)


class TestSettingsValidation:
    """Field validators and environment overrides."""

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("DEFAULT_WINDOW_RADIUS", raising=False)
        s = Settings(_env_file=None)
        assert s.default_window_radius == 2
        assert s.default_cutoff == "domain"
        assert s.report_format == "record"
        assert s.oracle_cell_limit == 40

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("DEFAULT_WINDOW_RADIUS", "3")
        monkeypatch.setenv("DEFAULT_CUTOFF", "SPLIT")
        s = Settings(_env_file=None)
        assert s.default_window_radius == 3
        assert s.default_cutoff == "split"

    @pytest.mark.parametrize("field, value", [
        ("default_window_radius", 0),
        ("default_cutoff", "gaussian"),
        ("report_format", "yaml"),
        ("max_workers", 0),
    ])
    def test_rejected_values(self, field, value):
        with pytest.raises(ValidationError):
            Settings(_env_file=None, **{field: value})

    @pytest.mark.parametrize("env, cls", [
        ("development", DevelopmentSettings),
        ("production", ProductionSettings),
        ("test", TestSettings),
    ])
    def test_settings_for_env(self, env, cls):
        assert type(get_settings_for_env(env)) is cls

    def test_production_logs_json(self, monkeypatch):
        monkeypatch.delenv("APP_ENV", raising=False)
        s = ProductionSettings(_env_file=None)
        assert s.is_production
        assert not s.is_development
        assert s.log_format == "json"

    @pytest.mark.parametrize("cls, env", [
        (DevelopmentSettings, "development"),
        (ProductionSettings, "production"),
        (TestSettings, "test"),
    ])
    def test_subclass_sets_its_environment(self, monkeypatch, cls, env):
        monkeypatch.delenv("APP_ENV", raising=False)
        assert cls(_env_file=None).app_env == env
