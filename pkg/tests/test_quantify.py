import numpy as np
import pytest

from omtense.errors import BudgetExceeded
from omtense.lattice import LatticeSpec, build_lattice
from omtense.quantify import Chunk, Domain, Plan, plan, scan


def first_row(plan: Plan, chunk: Chunk) -> tuple[int, ...]:
    (values,) = plan.assignments(chunk)
    return tuple(int(v) for v in values[0])


def test_odometer_order(chain2):
    domain = Domain(chain2, 3)
    (values,) = domain.decode(np.arange(domain.count))

    assert domain.count == 8
    assert values[0].tolist() == [0, 0, 0]
    assert values[1].tolist() == [0, 0, 1]
    assert values[4].tolist() == [1, 0, 0]
    assert values[-1].tolist() == [1, 1, 1]


def test_bottom_comes_first_in_the_alphabet():
    reversed_chain = build_lattice(LatticeSpec("reversed", ("1", "0"), (("0", "1"),), (("0", "1"),)))
    domain = Domain(reversed_chain, 2)
    (values,) = domain.decode(np.array([0, 3]))

    assert domain.alphabet.tolist() == [1, 0]
    assert values[0].tolist() == [1, 1]
    assert values[1].tolist() == [0, 0]


def test_pairs_are_split(chain2):
    domain = Domain(chain2, 2, arity=2)
    p, q = domain.decode(np.array([1, 4]))

    assert domain.width == 4
    assert domain.propositions == 4
    assert p.tolist() == [[0, 0], [0, 1]]
    assert q.tolist() == [[0, 1], [0, 0]]


def test_exhaustive_plan(fig1):
    scan_plan = plan(Domain(fig1, 3), limit=1_000)

    assert scan_plan.exhaustive
    assert scan_plan.total == 1_000
    assert scan_plan.samples is None


def test_sampled_plan(fig1):
    scan_plan = plan(Domain(fig1, 5), limit=300, seed=7)
    (values,) = scan_plan.assignments(Chunk(0, 300))

    assert not scan_plan.exhaustive
    assert scan_plan.samples == 300
    assert values.shape == (300, 5)
    assert ((values >= 0) & (values < fig1.n)).all()

    (again,) = plan(Domain(fig1, 5), limit=300, seed=7).assignments(Chunk(0, 300))

    assert np.array_equal(values, again)


def test_sampled_plan_is_stratified(fig1):
    scan_plan = plan(Domain(fig1, 4), limit=10)
    (values,) = scan_plan.assignments(Chunk(0, 10))

    # one draw from every tenth of the index space, so the leading digit is the stratum
    assert values[:, 0].tolist() == list(range(10))


def test_over_budget_enumeration_raises(fig1):
    with pytest.raises(BudgetExceeded) as error:
        plan(Domain(fig1, 5), limit=1_000, exhaustive=True)

    assert error.value.count == 100_000
    assert error.value.budget == 1_000


def test_assignment_reproduces_its_chunk(fig1):
    scan_plan = plan(Domain(fig1, 5), limit=500, seed=3)
    (values,) = scan_plan.assignments(scan_plan.chunks()[0])
    (single,) = scan_plan.assignment(123)

    assert np.array_equal(single, values[123])

    with pytest.raises(IndexError):
        scan_plan.assignment(500)


def test_scan_keeps_chunk_order(fig1):
    scan_plan = plan(Domain(fig1, 2), limit=100)

    assert scan(first_row, scan_plan) == [(0, 0)]
