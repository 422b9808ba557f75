import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from firlab import parse_field, parse_poly  # noqa: E402


@pytest.fixture(scope="session")
def gf4():
    return parse_field("gf(2,2)")


@pytest.fixture(scope="session")
def gf8():
    return parse_field("gf(2,3)")


@pytest.fixture(scope="session")
def ff2():
    return parse_field("funfield(2)")


@pytest.fixture
def P(gf4):
    """Parse a polynomial over GF(4)."""
    return lambda text: parse_poly(gf4, text)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[num])
