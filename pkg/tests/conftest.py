import json
import os
import sys

import numpy as np
import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from sboxopt.sbox import SBox  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def sboxes(min_n=3, max_n=5):
    """Hypothesis strategy: bijective S-boxes of a random small dimension."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.permutations(range(1 << n)).map(SBox))


@pytest.fixture(scope="session")
def frozen():
    with open(os.path.join(os.path.dirname(__file__), "frozen_values.json"), encoding="utf-8") as fh:
        return json.load(fh)


@pytest.fixture
def rng():
    return np.random.default_rng(20240501)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
