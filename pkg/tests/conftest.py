"""
Shared fixtures for the hyperfree test suite
"""

from pathlib import Path

import pytest
from loguru import logger

from hyperfree.arrangements import Arrangement
from hyperfree.config import Settings, set_settings
from hyperfree.files import load_arrangement

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    """Directory with the .arr fixture files"""
    return FIXTURES


@pytest.fixture
def load_fixture():
    """Parse a fixture file by name"""

    def _load(name: str):
        return load_arrangement(FIXTURES / name)

    return _load


@pytest.fixture
def fig1() -> Arrangement:
    return load_arrangement(FIXTURES / "fig1.arr").arrangement


@pytest.fixture(autouse=True)
def reset_runtime():
    """Default settings before each test, no loguru sinks after it"""
    set_settings(Settings())
    yield
    set_settings(Settings())
    logger.remove()
    logger.disable("hyperfree")
