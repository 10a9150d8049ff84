import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from karyx.game import KAryGame  # noqa: E402
from karyx.lattice import LatticeShape  # noqa: E402


def make_random_game(shape: LatticeShape, rng, integer: bool = False) -> KAryGame:
    if integer:
        vals = rng.integers(-5, 6, shape.dims).astype(float)
    else:
        vals = rng.uniform(-1.0, 1.0, shape.dims)
    vals[shape.bottom] = 0.0
    return KAryGame(shape, vals)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


_acceptance_lines = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = "PASS" if report.passed else "FAIL"
        _acceptance_lines.append(f"[{status}] AC{marker.args[0]}: {marker.args[1]}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split("AC")[1].split(":")[0])):
            terminalreporter.write_line(line)
