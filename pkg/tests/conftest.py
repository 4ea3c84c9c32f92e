from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

ROOT = Path(__file__).resolve().parent.parent
FIXTURE_DIR = ROOT / "fixtures"
GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURE_DIR


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: acceptance criteria suite")
    config.addinivalue_line("markers", "criterion(n): acceptance criterion the test belongs to")


def pytest_runtest_logreport(report):
    n = _CRITERIA_OF.get(report.nodeid)
    if n is None or (report.when != "call" and report.passed):
        return
    # an expected failure still means the criterion is not met
    ok = report.passed and not hasattr(report, "wasxfail")
    _RESULTS.setdefault(n, []).append((report.nodeid.rpartition("::")[2], ok))


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("criterion")
        if marker is not None:
            _CRITERIA_OF[item.nodeid] = marker.args[0]


_CRITERIA_OF: dict[str, int] = {}
_RESULTS: dict[int, list[tuple[str, bool]]] = {}


def pytest_terminal_summary(terminalreporter, config):
    criteria = _RESULTS
    if not criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(criteria):
        failed = [name for name, ok in criteria[n] if not ok]
        status = "PASS" if not failed else "FAIL"
        detail = f" ({', '.join(failed)})" if failed else ""
        terminalreporter.write_line(f"criterion {n}: {status}{detail}")
