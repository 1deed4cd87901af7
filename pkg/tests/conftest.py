"""Shared fixtures: canonical small fields and a tightly capped configuration."""

import sys
from pathlib import Path

import pytest

project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from config.settings import default_config
from src.core.gf import field_create


@pytest.fixture(scope="session")
def gf2():
    return field_create(2, 1)


@pytest.fixture(scope="session")
def gf3():
    return field_create(3, 1)


@pytest.fixture(scope="session")
def gf4():
    return field_create(2, 2)


@pytest.fixture(scope="session")
def gf8():
    return field_create(2, 3)


@pytest.fixture(scope="session")
def gf9():
    return field_create(3, 2)


@pytest.fixture(scope="session")
def gf16():
    return field_create(2, 4)


@pytest.fixture
def serial_config():
    return default_config.with_overrides(workers=1)


@pytest.fixture
def threaded_config():
    return default_config.with_overrides(workers=3)


@pytest.fixture
def tiny_caps():
    """Caps small enough that a handful of desk-scale calls overflow them."""
    return default_config.with_overrides(enumeration_cap=100, poly_enum_cap=100,
                                         codeword_cap=100, group_cap=5, field_cap=64)


@pytest.fixture
def fixtures_dir():
    return project_root / "tests" / "fixtures"
