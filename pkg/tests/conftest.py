import sys

import pytest

from linpn.gln import build_symplectic, example_config
from linpn.symplectic import SymplecticLieAlgebra

from helpers import heisenberg_plus_line


@pytest.fixture(scope="session")
def example_sla() -> SymplecticLieAlgebra:
    return build_symplectic(example_config(1, 0))


@pytest.fixture(scope="session")
def example_lsa(example_sla):
    return example_sla.lsa


@pytest.fixture(scope="session")
def heis_sla() -> SymplecticLieAlgebra:
    return SymplecticLieAlgebra(*heisenberg_plus_line())


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
