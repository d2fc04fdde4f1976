import random

import pytest

from dispenser.formula import CnfFormula, random_cnf

A_OR_B = CnfFormula(2, ((1, 2),))
IFF = CnfFormula(2, ((-1, 2), (1, -2)))
CONTRADICTION = CnfFormula(1, ((1,), (-1,)))


def random_formulas(count, seed, max_vars=8, max_clauses=16, min_vars=1):
    rng = random.Random(seed)
    return [random_cnf(rng.randint(min_vars, max_vars), rng.randint(0, max_clauses), rng)
            for _ in range(count)]


@pytest.fixture
def a_or_b():
    return A_OR_B


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.outcome == "failed":
        _acceptance.setdefault(report.nodeid.split("::")[-1], "failed")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance.items()):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
