import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from jetframes.suites import run_suite  # noqa: E402


@pytest.fixture(scope="session")
def suite_reports():
    """Lazy cache of full-scale suite runs shared by the acceptance tests."""
    cache = {}

    def get(name, ns=(1, 2, 3, 4), trials=200, seed=42):
        key = (name, tuple(ns), trials, seed)
        if key not in cache:
            cache[key] = run_suite(name, ns, trials, seed)
        return cache[key]

    return get
