import pytest

from omtense.config import Budget
from omtense.errors import OmtenseError


def test_defaults(monkeypatch):
    monkeypatch.delenv("OMT_BUDGET", raising=False)

    assert Budget.from_env() == Budget(propositions=10**6, pairs=10**6, seed=0, workers=1)


def test_environment(monkeypatch):
    monkeypatch.setenv("OMT_BUDGET", "500")
    budget = Budget.from_env()

    assert budget.propositions == 500
    assert budget.limit(1) == 500
    assert budget.limit(2) == 10**6


@pytest.mark.parametrize("value", ["0", "-3", "many"])
def test_invalid_environment(monkeypatch, value):
    monkeypatch.setenv("OMT_BUDGET", value)

    with pytest.raises(OmtenseError, match=f'OMT_BUDGET "{value}" is not a positive integer'):
        Budget.from_env()


def test_override():
    budget = Budget(propositions=500).override(pairs=20, seed=7)

    assert budget == Budget(propositions=500, pairs=20, seed=7, workers=1)
    assert budget.override() == budget

    with pytest.raises(OmtenseError, match='workers "0" is not a positive integer'):
        budget.override(workers=0)
