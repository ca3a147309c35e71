import os

import pytest
from hypothesis import HealthCheck, settings

from graphtimeline.timeline import compute_lifespans, parse_timeline

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# E1 = {12}; then -12, +13, +23
TL1_TEXT = "timeline 3 4\ninit 1 2\n- 1 2\n+ 1 3\n+ 2 3\n"
# triangle; then -12, +12, -23
TL2_TEXT = "timeline 3 4\ninit 1 2\ninit 1 3\ninit 2 3\n- 1 2\n+ 1 2\n- 2 3\n"


@pytest.fixture
def tl1():
    return parse_timeline(TL1_TEXT)


@pytest.fixture
def tl2():
    return parse_timeline(TL2_TEXT)


@pytest.fixture
def ls1(tl1):
    return compute_lifespans(tl1)


@pytest.fixture
def ls2(tl2):
    return compute_lifespans(tl2)


# one line per acceptance criterion, printed again at the end of the run
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
