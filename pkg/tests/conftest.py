import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "det",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("det")

# One line per acceptance criterion, filled in by tests/test_acceptance.py
# and echoed after the run regardless of output capturing.
ACCEPTANCE_REPORT = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_REPORT:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_REPORT:
            terminalreporter.write_line(line)


def pytest_addoption(parser):
    parser.addoption(
        "--deep",
        action="store_true",
        default=False,
        help="run the slow n = 13..15 enumeration cross-checks and the "
        "full-depth cover minimality sweep",
    )


@pytest.fixture
def deep(request):
    if not request.config.getoption("--deep"):
        pytest.skip("needs --deep")
    return True
