from collections.abc import Callable
from pathlib import Path

import pytest

from omtense import fixtures
from omtense.config import Budget
from omtense.lattice import Oml
from omtense.timeframe import TimeFrame

DATA = Path(__file__).parent.parent / "Examples" / "Data"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def fig1() -> Oml:
    return fixtures.lattice("fig1")


@pytest.fixture(scope="session")
def mo2() -> Oml:
    return fixtures.lattice("mo2")


@pytest.fixture(scope="session")
def boolean4() -> Oml:
    return fixtures.lattice("boolean4")


@pytest.fixture(scope="session")
def chain2() -> Oml:
    return fixtures.lattice("chain2")


@pytest.fixture(scope="session")
def o6() -> Oml:
    return fixtures.lattice("o6")


@pytest.fixture(scope="session")
def le5() -> TimeFrame:
    return fixtures.le(5)


@pytest.fixture
def small_budget() -> Budget:
    return Budget(propositions=2_000, pairs=2_000)


@pytest.fixture
def data() -> Path:
    return DATA


@pytest.fixture
def golden() -> Callable[[str], str]:
    def read(name: str) -> str:
        return (GOLDEN / f"{name}.txt").read_text(encoding="utf-8")

    return read
