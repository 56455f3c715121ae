"""
Pytest configuration and fixtures for FilterLab
"""

import os
import sys

# Add project root to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import numpy as np
import pytest
from click.testing import CliRunner
from loguru import logger

from src.core.config.settings import settings
from src.nnet.model import from_weights
from src.nnet.reference import exact_average_model, published_relu_model
from src.train.suite import replicate_reference_suite


def pytest_addoption(parser):
    """Add custom command line options"""
    parser.addoption(
        "--suite-seed",
        action="store",
        type=int,
        default=settings.seed,
        help="Seed for the four-network suite used by regression tests",
    )


@pytest.fixture(scope="session")
def suite_seed(request):
    """Get suite seed from command line"""
    return request.config.getoption("--suite-seed")


@pytest.fixture(scope="session")
def suite_result(suite_seed):
    """
    Four trained suite networks, trained once per session
    """
    logger.info(f"Training the four-network suite (seed {suite_seed})")
    result = replicate_reference_suite(suite_seed)
    logger.info(f"Suite trained in {result.duration_s:.1f}s")
    return result


@pytest.fixture
def printed_relu_model():
    """Single-hidden-layer ReLU network with the published weights"""
    return published_relu_model()


@pytest.fixture
def exact_model():
    """Network that computes the two-tap moving average exactly"""
    return exact_average_model(2)


@pytest.fixture
def witness_model():
    """ReLU network with identity first layer; four regions around the origin"""
    return from_weights([np.eye(2), [[1.0], [1.0]]], "relu")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def cli_runner():
    """Click runner for command tests"""
    return CliRunner()


# Pytest markers registration
def pytest_configure(config):
    """Register custom pytest markers"""
    markers = [
        "unit: marks tests as unit tests",
        "integration: marks tests as integration tests",
        "smoke: marks tests as smoke tests",
        "regression: marks tests as regression tests",
        "performance: marks tests as performance tests",
        "slow: marks tests as slow running tests",
    ]

    for marker in markers:
        config.addinivalue_line("markers", marker)


# Test session hooks
def pytest_sessionstart(session):
    """Actions to perform at the start of test session"""
    logger.info("🚀 Starting test session")
    logger.info(f"   • Suite seed: {session.config.getoption('--suite-seed')}")
    logger.info(f"   • Threads: {settings.threads}")


def pytest_sessionfinish(session, exitstatus):
    """Actions to perform at the end of test session"""
    logger.info("🏁 Test session finished")
    logger.info(f"📈 Exit status: {exitstatus}")

    if hasattr(session, "testscollected"):
        logger.info(f"📋 Tests collected: {session.testscollected}")
