import pytest

from qscore import sample_paths

_acceptance = []


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    _acceptance.append((marker.args[0], call.excinfo is None))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed in _acceptance:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}")


@pytest.fixture
def sample():
    return sample_paths()


@pytest.fixture
def cli_args(sample, tmp_path):
    return [
        "--students", str(sample["students"]),
        "--univ-ranks", str(sample["univ_ranks"]),
        "--comp-ranks", str(sample["comp_ranks"]),
        "--store", str(tmp_path / "store"),
    ]
