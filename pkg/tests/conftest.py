from pathlib import Path

import hypothesis
import pytest

hypothesis.settings.register_profile("default", deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile("default")

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "relcalc" / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"

# golden report name -> compute flags (fixture file names resolved against FIXTURES)
GOLDEN_RUNS = {
    "mixed": ["--catalog", "mixed-catalog.json", "--config", "mixed-config.json", "--dossier", "mixed.json"],
    "usa-gbr": ["--config", "default-config.json", "--dossier", "usa-gbr.json"],
    "usa-irn": ["--config", "default-config.json", "--dossier", "usa-irn.json"],
    "usa-ind": ["--config", "default-config.json", "--dossier", "usa-ind.json"],
}

_criteria: list[tuple[str, str]] = []


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _criteria.append((marker.args[0], "PASS" if rep.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in _criteria:
        terminalreporter.write_line(f"[{status}] {name}")
