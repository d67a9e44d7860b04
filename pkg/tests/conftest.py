from importlib import resources
from pathlib import Path

import pytest

from propneed import parse_library

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def toy_path() -> Path:
    return Path(str(resources.files("propneed") / "data" / "toy.prop"))


@pytest.fixture(scope="session")
def toy_lib(toy_path):
    return parse_library(toy_path.read_bytes())


@pytest.fixture
def golden():
    return GOLDEN


_ACCEPTANCE: dict[str, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(name): exit criterion of the build")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    name = marker.args[0]
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _ACCEPTANCE[name] = "PASS" if rep.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in _ACCEPTANCE.items():
        terminalreporter.write_line(f"[{status}] {name}")
