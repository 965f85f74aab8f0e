import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

ROOT = Path(__file__).resolve().parents[1]
WISCONSIN = ROOT / "data" / "breast-cancer-wisconsin.csv"

# Filled by test_acceptance; printed after the run.
ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def wisconsin_path():
    if not WISCONSIN.is_file():
        pytest.fail(f"bundled dataset missing: {WISCONSIN}")
    return WISCONSIN
