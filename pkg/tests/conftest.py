import pytest

from matroid_hopf.matroid import catalog

ACCEPTANCE_LINES: list[str] = []


def pytest_addoption(parser):
    parser.addoption("--run-n6", action="store_true", help="run the optional n = 6 sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-n6"):
        return
    skip = pytest.mark.skip(reason="n = 6 sweep needs --run-n6")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def catalog4():
    return catalog(4)


@pytest.fixture(scope="session")
def catalog5():
    return catalog(5)
