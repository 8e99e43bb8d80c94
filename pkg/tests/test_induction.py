import numpy as np
import pytest

from omtense import fixtures
from omtense.config import Budget
from omtense.errors import BudgetExceeded, EmptyRelation
from omtense.induction import (
    FrameInducible,
    NotFrameInducible,
    check_always_star,
    check_past_future_star,
    check_star_inequalities,
    classify_inducibility,
    indicator_proposition,
    induce_R1,
    induce_R2,
    induce_R3,
    roundtrip_frame,
    starred_quadruple,
)
from omtense.report import Verdict
from omtense.tense import OperatorQuadruple, frame_induced_quadruple, identity_else_constant
from omtense.timeframe import frame


def pairs(names: str) -> set[tuple[str, str]]:
    return {(pair[0], pair[2]) for pair in names.split()}


R3_EXAMPLE2 = pairs("1>1 2>2 3>3 3>4 3>5 4>3 4>4 4>5 5>3 5>4 5>5")


@pytest.fixture(scope="module")
def example2(fig1) -> OperatorQuadruple:
    return fixtures.example2_operators(fig1)


def test_example2_relations(fig1, example2):
    r1 = induce_R1(fig1, example2.P, example2.F)
    r2 = induce_R2(fig1, example2.H, example2.G)
    r3 = induce_R3(fig1, example2)

    assert r1.exhaustive and r1.samples is None
    assert set(r1.named_pairs()) == pairs("1>1 2>1 2>2 2>3 2>4 2>5 3>1 3>3 3>4 3>5 4>1 4>3 4>4 4>5 5>1 5>3 5>4 5>5")
    assert set(r2.named_pairs()) == pairs("1>1 1>2 1>3 1>4 1>5 2>2 3>2 3>3 3>4 3>5 4>2 4>3 4>4 4>5 5>2 5>3 5>4 5>5")
    assert set(r3.named_pairs()) == R3_EXAMPLE2
    assert r3.pairs == r1.pairs & r2.pairs


def test_exclusion_witness(fig1, example2):
    r3 = induce_R3(fig1, example2)

    assert set(r3.witnesses) == {(s, t) for s in range(5) for t in range(5)} - r3.pairs
    assert r3.describe_witness(0, 1) == "(1, 2) excluded by q = (0, a, 0, 0, 0): q(t) <= F(q)(s) fails with a vs 0"


def test_frame_induced_operators_induce_their_frame(fig1):
    le3 = fixtures.le(3)
    induced = induce_R3(fig1, frame_induced_quadruple(fig1, le3))

    assert induced.frame() == le3


def test_past_and_future_induce_their_frame(fig1, le5):
    ops = frame_induced_quadruple(fig1, le5)

    assert induce_R1(fig1, ops.P, ops.F).frame() == le5


def test_sampled_relation_is_an_upper_bound(fig1, example2):
    induced = induce_R3(fig1, example2, Budget(propositions=100))

    assert not induced.exhaustive
    assert induced.samples == 100
    assert R3_EXAMPLE2 <= set(induced.named_pairs())

    with pytest.raises(BudgetExceeded):
        induce_R3(fig1, example2, Budget(propositions=100), exhaustive=True)


def test_empty_relation(chain2):
    points = fixtures.points(2)
    # P = F = 0 leaves no pair with q(s) <= P(q)(t)
    zero = identity_else_constant(chain2, points, [], "meet")
    induced = induce_R1(chain2, zero, zero)

    assert induced.empty

    with pytest.raises(EmptyRelation):
        induced.frame()


def test_indicator_proposition(fig1, le5):
    assert indicator_proposition(fig1, le5, "3").render(fig1) == "(0, 0, 1, 0, 0)"


def test_starred_quadruple(fig1, example2):
    starred = starred_quadruple(fig1, induce_R3(fig1, example2))
    p = fixtures.example1_p(fig1)

    assert starred.name == "R3*"
    assert starred.P(p).render(fig1) == "(c', b', 1, 1, 1)"
    assert starred.G(p).render(fig1) == "(c', b', 0, 0, 0)"


def test_roundtrip(boolean4):
    report = roundtrip_frame(boolean4, fixtures.le(4))

    assert report.verdict is Verdict.PASS
    assert [d.suite for d in report.details] == ["R3 = R", "P*(q) = P(q)", "F*(q) = F(q)", "H*(q) = H(q)", "G*(q) = G(q)"]


ROUNDTRIP_FRAMES = [
    fixtures.le(2),
    fixtures.le(3),
    frame("chain", ("1", "2"), [("1", "2")]),
    frame("swap", ("1", "2"), [("1", "2"), ("2", "1")]),
    frame("loop", ("1", "2"), [("1", "1")]),
    frame("path", ("1", "2", "3"), [("1", "2"), ("2", "3")]),
    frame("cycle", ("1", "2", "3"), [("1", "2"), ("2", "3"), ("3", "1")]),
    frame("mixed", ("1", "2", "3"), [("1", "1"), ("1", "3"), ("3", "2")]),
    frame("full", ("1", "2", "3"), [(s, t) for s in "123" for t in "123"]),
    frame("blocks", ("1", "2", "3"), [("1", "1"), ("2", "2"), ("2", "3"), ("3", "2"), ("3", "3")]),
]


@pytest.mark.parametrize("f", ROUNDTRIP_FRAMES, ids=lambda f: f.name)
@pytest.mark.parametrize("name", ["chain2", "boolean4", "boolean8", "mo2", "fig1"])
def test_roundtrip_on_every_lattice(name, f):
    assert roundtrip_frame(fixtures.lattice(name), f).verdict is Verdict.PASS


def test_classify_frame_induced(fig1):
    le3 = fixtures.le(3)
    verdict = classify_inducibility(fig1, frame_induced_quadruple(fig1, le3, "le3-ops"))

    assert isinstance(verdict, FrameInducible)
    assert verdict.frame == le3
    assert verdict.frame.name == "le3-ops-induced"


def test_classify_example2(fig1, example2):
    verdict = classify_inducibility(fig1, example2)

    assert isinstance(verdict, NotFrameInducible)
    assert verdict.operator == "P"
    assert verdict.reason == "P* differs from P"
    assert verdict.witness.describe() == "q = (0, 0, 0, 0, 0) at t=1: P*(q) = P(q) fails with 0 vs 1"


@pytest.mark.slow
def test_star_inequalities(fig1, example2):
    report = check_star_inequalities(fig1, example2)

    assert report.verdict is Verdict.PASS
    assert report.notes == (("P* = P", "no"), ("F* = F", "no"), ("H* = H", "no"), ("G* = G", "no"))


@pytest.mark.slow
def test_past_future_and_always_star(fig1, example2):
    assert check_past_future_star(fig1, example2).verdict is Verdict.PASS
    assert check_always_star(fig1, example2).verdict is Verdict.PASS


def test_star_inequalities_on_a_frame(boolean4):
    report = check_star_inequalities(boolean4, frame_induced_quadruple(boolean4, fixtures.le(4)))

    assert report.verdict is Verdict.PASS
    assert report.note("P* = P") == "yes"


def test_star_checks_skip_empty_relations(chain2):
    points = fixtures.points(2)
    zero = identity_else_constant(chain2, points, [], "meet")
    ops = OperatorQuadruple(zero, zero, zero, zero, "zero")

    report = check_past_future_star(chain2, ops)

    assert report.verdict is Verdict.SKIPPED
    assert report.reason == "induced relation R1 is empty"


@pytest.mark.slow
def test_workers_induce_the_same_relation(fig1, example2):
    serial = induce_R3(fig1, example2)
    parallel = induce_R3(fig1, example2, Budget(workers=3))

    assert np.array_equal(parallel.matrix, serial.matrix)
    assert parallel.witnesses == serial.witnesses
