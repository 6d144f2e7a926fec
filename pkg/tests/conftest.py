import numpy as np
import pytest

from braidgate.qstate import PureState

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def state(*amps) -> PureState:
    return PureState.from_amplitudes(np.array(amps, dtype=complex))
