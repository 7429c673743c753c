import warnings

import pytest

from thinlie.nqengine import build, central_quotient
from thinlie.presets import make_preset
from thinlie.thinanalysis import diamond_report, match_expected_pattern

ACCEPTANCE_LINES = []


class Instance:
    def __init__(self, p, q, s, lam, D, k=1):
        self.P = make_preset(p, q, s, lam, k=k)
        self.N = build(self.P, D)
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            self.L = central_quotient(self.N)
        self.report = diamond_report(self.L, params=self.P.params)
        self.pattern = match_expected_pattern(self.report, p, q, s, self.P.params["lambda"])


_CACHE = {}


def instance(p, q, s, lam, D, k=1):
    key = (p, q, s, str(lam), D, k)
    if key not in _CACHE:
        _CACHE[key] = Instance(p, q, s, lam, D, k)
    return _CACHE[key]


@pytest.fixture(scope="session")
def main_instance():
    return instance(7, 7, 1, 3, 120)


@pytest.fixture(scope="session")
def fake1_instance():
    return instance(7, 7, 1, 1, 120)


@pytest.fixture(scope="session")
def lambda0_instance():
    return instance(7, 7, 1, 0, 110)


@pytest.fixture(scope="session")
def q25_instance():
    return instance(5, 25, 1, 2, 200)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
