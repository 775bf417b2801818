import math

import pytest

from ergodic_spectrum.ifs import validate_params

LN2 = math.log(2.0)

_ACCEPTANCE = []


@pytest.fixture
def lebesgue():
    """lambda0 = lambda1 = ln 2: the attractor is [0, 1]."""
    return validate_params(LN2, LN2)


@pytest.fixture
def golden_ratio_ifs():
    """lambda0 = ln 2, lambda1 = 2 ln 2."""
    return validate_params(LN2, 2 * LN2)


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_ACCEPTANCE):
        terminalreporter.write_line(line)
