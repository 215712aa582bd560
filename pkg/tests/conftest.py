import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ricci_flat import catalog  # noqa: E402

_CRITERIA: dict[int, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = marker.args
        _CRITERIA.setdefault(number, []).append((title, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        results = _CRITERIA[number]
        title = results[0][0]
        ok = all(outcome == "passed" for _, outcome in results)
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  ({len(results)} checks)")


@pytest.fixture(scope="session")
def named_graphs():
    return {
        "petersen": catalog.petersen(),
        "dodecahedral": catalog.dodecahedral(),
        "half-dodecahedral": catalog.half_dodecahedral(),
        "triplex": catalog.triplex(),
    }


@pytest.fixture
def graph_file(tmp_path):
    def write(g, name="g.txt"):
        from ricci_flat.graph_core import write_edge_list

        path = tmp_path / name
        write_edge_list(g, path)
        return str(path)

    return write
