from importlib import resources
from pathlib import Path

import pytest

from tra.ordinal import iso27005_matrix, sample_matrix

DATA = Path(str(resources.files("tra.data")))

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def model_path():
    return DATA / "interlocking_model.json"


@pytest.fixture
def scenarios_path():
    return DATA / "interlocking_scenarios.json"


@pytest.fixture
def catalog_path():
    return DATA / "sample_catalog.json"


@pytest.fixture
def sample():
    return sample_matrix()


@pytest.fixture
def iso():
    return iso27005_matrix()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
