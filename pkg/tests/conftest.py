import pytest

from cocycle_forge.extgrp import full_pipeline
from cocycle_forge.gf import field_of_order
from cocycle_forge.modrep import decompose_P, permutation_module, trivial_module
from cocycle_forge.pgroup import point_stabilizer, psl2


class Setting:
    def __init__(self, q, p):
        self.q, self.p = q, p
        self.F = field_of_order(q)
        self.L = psl2(self.F, p=p)
        self.H = point_stabilizer(self.L)
        self.P = permutation_module(self.L, p)
        self.dec = decompose_P(self.P)
        self.V = self.dec.V
        self.IL = self.dec.I
        self.IH = trivial_module(self.H, p)


@pytest.fixture(scope="session")
def s43():
    return Setting(4, 3)


@pytest.fixture(scope="session")
def s73():
    return Setting(7, 3)


@pytest.fixture(scope="session")
def pipe43():
    return full_pipeline(4, 3)


@pytest.fixture(scope="session")
def pipe73():
    return full_pipeline(7, 3)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: one test per acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    results = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            if "test_acceptance.py" not in rep.nodeid or rep.when not in ("call", "setup"):
                continue
            name = rep.nodeid.split("::")[-1]
            num = int(name.split("_")[2])
            ok = status == "passed"
            results[num] = results.get(num, True) and ok
    if results:
        terminalreporter.section("acceptance criteria")
        for num in sorted(results):
            terminalreporter.write_line(f"criterion {num}: {'PASS' if results[num] else 'FAIL'}")
