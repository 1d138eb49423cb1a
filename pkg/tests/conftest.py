import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from roughtopo import make_relation, make_universe  # noqa: E402

EXAMPLE_PAIRS = [("a", "a"), ("a", "c"), ("b", "c"), ("c", "a"), ("c", "d")]


@pytest.fixture
def abcd():
    return make_universe(["a", "b", "c", "d"])


@pytest.fixture
def example(abcd):
    return make_relation(abcd, EXAMPLE_PAIRS)


@pytest.fixture
def u123():
    return make_universe(["1", "2", "3"])


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
