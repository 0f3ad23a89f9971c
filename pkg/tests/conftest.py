import sys

import pytest

from sl3coh.lie import build_sl3, quotient_by_center
from sl3coh.modules import adjoint_module, quotient_module_center, simple_module, trivial_module


@pytest.fixture(scope="session")
def sl3():
    return build_sl3(3)


@pytest.fixture(scope="session")
def gbar(sl3):
    return quotient_by_center(sl3, strict=True)


@pytest.fixture(scope="session")
def simples(sl3):
    return {(r, s): simple_module(sl3, r, s) for r in range(3) for s in range(3)}


@pytest.fixture(scope="session")
def standard_modules(sl3):
    return {
        "trivial": trivial_module(sl3),
        "adjoint": adjoint_module(sl3),
        "quotient-center": quotient_module_center(sl3),
    }


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
