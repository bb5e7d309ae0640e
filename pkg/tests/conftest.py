"""Shared fixtures: fresh config and metrics per test, seeded randomness."""

import random

import pytest

from src.config import get_config, reset_config
from src.observability import reset_metrics_collector


@pytest.fixture(autouse=True)
def fresh_globals(monkeypatch):
    """Reset the config and metrics singletons around every test."""
    for name in ("WORKBENCH_THREADS", "WORKBENCH_MAX_ORDER", "WORKBENCH_ENUM_MAX_N",
                 "WORKBENCH_MINOR_MAX_N", "WORKBENCH_SEARCH_MAX_N", "WORKBENCH_PSI_MAX_S",
                 "WORKBENCH_DENSE_MAX_N", "WORKBENCH_CANON_EXACT_MAX_N", "WORKBENCH_LOG_LEVEL",
                 "WORKBENCH_SEED", "WORKBENCH_MADER_FACTOR"):
        monkeypatch.delenv(name, raising=False)
    reset_config()
    reset_metrics_collector()
    yield
    reset_config()
    reset_metrics_collector()


@pytest.fixture
def rng():
    """Random source seeded from the configured seed."""
    return random.Random(get_config().seed)
