import os
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for the oracle module

_ACCEPTANCE_RESULTS: list[tuple[str, bool]] = []


def data_dir() -> Path:
    """Directory holding user-supplied benchmark datasets (CSV form)."""
    return Path(os.environ.get("SEFR_DATA_DIR", Path(__file__).parent.parent / "data"))


def dataset_path(name: str) -> Path:
    return data_dir() / name


def require_dataset(name: str) -> Path:
    path = dataset_path(name)
    if not path.exists():
        pytest.skip(f"dataset {name} not present under {data_dir()} (see README)")
    return path


@pytest.fixture
def rng():
    return np.random.default_rng(42)


def record_acceptance(name: str, passed: bool) -> None:
    _ACCEPTANCE_RESULTS.append((name, passed))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    name = marker.args[0] if marker.args else item.name
    if report.skipped:
        record_acceptance(f"{name} (skipped: data not present)", True)
    else:
        record_acceptance(name, report.passed)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed in _ACCEPTANCE_RESULTS:
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[ACCEPTANCE] {name}: {verdict}")


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(name): ties a test to an acceptance criterion")
