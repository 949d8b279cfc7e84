import random
from pathlib import Path

import pytest

import chainsym
from chainsym.arith import PrimeField
from chainsym.io import load_complex

FIXTURES = Path(chainsym.__file__).parent / "fixtures"


@pytest.fixture
def fixture_complex():
    return lambda name: load_complex(FIXTURES / f"{name}.json")


@pytest.fixture
def F2():
    return PrimeField(2)


@pytest.fixture
def F3():
    return PrimeField(3)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n])
    missing = [n for n in range(1, 11) if n not in RESULTS]
    for n in missing:
        terminalreporter.write_line(f"criterion {n:>2}: not run")
