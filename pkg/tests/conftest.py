"""Test configuration and fixtures."""

import pytest
from click.testing import CliRunner

from src.complex import bundled_complex
from src.config import TestSettings
from src.cover import bundled_cover
from src.group import bundled_action


@pytest.fixture(scope="session")
def test_settings():
    """Test settings fixture."""
    return TestSettings()


@pytest.fixture(autouse=True)
def test_environment(monkeypatch, test_settings):
    """Route report files and log level through the test settings."""
    import src.config

    for name in ("output_dir", "log_level"):
        monkeypatch.setattr(src.config.settings, name, getattr(test_settings, name))


@pytest.fixture
def hexagon():
    return bundled_complex("hexagon")


@pytest.fixture
def octahedron():
    return bundled_complex("octahedron")


@pytest.fixture
def torus():
    return bundled_complex("torus-3x3")


@pytest.fixture
def antipodal():
    return bundled_action("octahedron-antipodal")


@pytest.fixture
def hexagon_rotation():
    return bundled_action("hexagon-rotation")


@pytest.fixture
def hexagon_reflection():
    return bundled_action("hexagon-reflection")


@pytest.fixture
def torus_swap():
    return bundled_action("torus-swap")


@pytest.fixture
def line():
    return bundled_cover("z-on-r")


@pytest.fixture
def plane():
    return bundled_cover("z2-on-r2")


@pytest.fixture
def strip():
    return bundled_cover("strip")


@pytest.fixture
def runner():
    """Click CLI runner fixture."""
    return CliRunner()
