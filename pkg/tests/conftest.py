import os
from pathlib import Path

import pytest

from cospec.survey.catalog import generate_cubic

DATA = Path(__file__).parent / "data"
_ACCEPTANCE: dict[str, str] = {}


def catalog16_path():
    """Order-16 corpus: $COSPEC_CATALOG_16 if set, else the bundled file."""
    env = os.environ.get("COSPEC_CATALOG_16")
    path = Path(env) if env else DATA / "cubic16.g6"
    return path if path.exists() else None


@pytest.fixture(scope="session")
def cat12():
    return generate_cubic(12)


@pytest.fixture(scope="session")
def cat14():
    return generate_cubic(14)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    label = marker.args[0]
    if rep.when == "call":
        _ACCEPTANCE[label] = "PASS" if rep.passed else "FAIL"
    elif rep.when == "setup" and rep.skipped:
        _ACCEPTANCE[label] = "SKIP"
    elif rep.when == "setup" and rep.failed:
        _ACCEPTANCE[label] = "FAIL"


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{_ACCEPTANCE[label]:4}  {label}")
