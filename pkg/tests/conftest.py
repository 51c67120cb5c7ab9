"""
Pytest configuration and shared fixtures
"""
import logging
import os
from fractions import Fraction
from pathlib import Path

import pytest
from click.testing import CliRunner
from faker import Faker

from src.config.constants import LOGGER_ROOT
from src.core.identities import CubicSeed, FiveCubeSeed
from src.core.recurrences import LinearRecurrence2

TAXICAB_FORGE_VARIABLES = (
    "TAXICAB_FORGE_WORKERS",
    "TAXICAB_FORGE_CHUNKS_PER_WORKER",
    "TAXICAB_FORGE_CLEAR_CAP",
    "TAXICAB_FORGE_FORMAT",
    "TAXICAB_FORGE_LOG_LEVEL",
    "TAXICAB_FORGE_LOG_FILE",
)

# Set test environment
os.environ["TESTING"] = "true"
for _name in TAXICAB_FORGE_VARIABLES:
    os.environ.pop(_name, None)


@pytest.fixture
def project_root():
    """Get project root directory"""
    return Path(__file__).parent.parent


@pytest.fixture
def fake():
    """Seeded Faker instance for reproducible property tests"""
    Faker.seed(20240613)
    return Faker()


@pytest.fixture
def random_fraction(fake):
    """Factory for random nonzero-denominator rationals"""
    def make(bound: int = 50) -> Fraction:
        return Fraction(fake.random_int(-bound, bound), fake.random_int(1, bound))
    return make


@pytest.fixture
def euler_seed():
    """3^3 + 4^3 + 5^3 = 6^3"""
    return CubicSeed(3, 4, 5, 6)


@pytest.fixture
def irrational_euler_seed():
    """1^3 + 6^3 + 8^3 = 9^3, whose Euler forms need sqrt(3) and sqrt(15)"""
    return CubicSeed(1, 6, 8, 9)


@pytest.fixture
def five_cube_seed():
    """(-3)^3 + 0^3 + 6^3 + 0^3 + (-4)^3 = 5^3"""
    return FiveCubeSeed(-3, 0, 6, 0, -4, 5)


@pytest.fixture
def fibonacci():
    """w(n+2) = w(n+1) + w(n), w(0) = 0, w(1) = 1"""
    return LinearRecurrence2(1, 1)


@pytest.fixture
def cli_runner():
    """Click test runner"""
    return CliRunner()


@pytest.fixture(autouse=True)
def reset_environment():
    """Reset environment variables after each test"""
    original_env = os.environ.copy()
    yield
    os.environ.clear()
    os.environ.update(original_env)


@pytest.fixture(autouse=True)
def reset_logging():
    """Drop handlers bound to a previous test's stderr"""
    yield
    root = logging.getLogger(LOGGER_ROOT)
    for handler in list(root.handlers):
        root.removeHandler(handler)
        handler.close()
