import pytest

from omtense.config import Budget
from omtense.laws import Apply, Complement, Const, Var, check_law, eq, join, leq, meet, sasaki_and, sasaki_imp
from omtense.quantify import Domain, plan
from omtense.report import Verdict
from omtense.tense import frame_induced_quadruple

x, y, z = Var("x"), Var("y"), Var("z")

DISTRIBUTIVE = eq(meet(x, join(y, z)), join(meet(x, y), meet(x, z)))


def test_labels():
    assert sasaki_and(x, Complement(y)).label == "(x ⊙ y')"
    assert Complement(sasaki_imp(x, y)).label == "((x → y))'"
    assert DISTRIBUTIVE.title == "(x ∧ (y ∨ z)) = ((x ∧ y) ∨ (x ∧ z))"
    assert leq(Complement(y), Complement(x), premise=(x, y)).title == "x <= y implies y' <= x'"


def test_variables_and_subterms():
    term = join(meet(x, y), meet(x, z))

    assert DISTRIBUTIVE.variables == ("x", "y", "z")
    assert [t.label for t in term.subterms()] == ["x", "y", "(x ∧ y)", "z", "(x ∧ z)", "((x ∧ y) ∨ (x ∧ z))"]


def test_distributive_on_boolean(boolean4):
    report = check_law(DISTRIBUTIVE, boolean4)

    assert report.verdict is Verdict.PASS
    assert report.samples is None
    assert report.suite == DISTRIBUTIVE.title


def test_distributive_fails_on_mo2(mo2):
    report = check_law(DISTRIBUTIVE, mo2, instance="mo2")

    assert report.failed
    assert report.instance == "mo2"
    assert report.witness.assignment == (("x", "a"), ("y", "b"), ("z", "b'"))
    assert report.witness.point is None
    assert report.witness.describe() == "x = a, y = b, z = b': (x ∧ (y ∨ z)) = ((x ∧ y) ∨ (x ∧ z)) fails with a vs 0"


def test_replay_lists_every_subterm(mo2):
    replay = check_law(DISTRIBUTIVE, mo2).witness.replay()

    assert replay[:5] == ("x = a", "y = b", "z = b'", "(y ∨ z) = 1", "(x ∧ (y ∨ z)) = a")
    assert replay[-3:] == (
        "(x ∧ (y ∨ z)) = a",
        "((x ∧ y) ∨ (x ∧ z)) = 0",
        "(x ∧ (y ∨ z)) = ((x ∧ y) ∨ (x ∧ z)) holds: no",
    )


def test_premise(fig1):
    assert check_law(leq(Complement(y), Complement(x), premise=(x, y)), fig1).verdict is Verdict.PASS
    assert check_law(leq(x, y), fig1).failed


def test_constants(fig1):
    top = Const(fig1.top, "1")
    report = check_law(eq(sasaki_and(x, top), x), fig1)

    assert report.verdict is Verdict.PASS


def test_pointwise_law_over_time_points(fig1):
    report = check_law(leq(meet(x, y), x), fig1, ("1", "2"))

    assert report.verdict is Verdict.PASS

    report = check_law(leq(x, meet(x, y)), fig1, ("1", "2"))

    # first failure in odometer order: x = (0, a), y = (0, 0) at the second point
    assert report.witness.assignment == (("x", "(0, a)"), ("y", "(0, 0)"))
    assert report.witness.point == "2"


def test_sampled_law_is_one_sided(fig1):
    budget = Budget(propositions=50, pairs=50, seed=1)
    report = check_law(leq(sasaki_and(x, y), y), fig1, ("1", "2"), budget)

    assert report.verdict is Verdict.ONE_SIDED
    assert report.samples == 50
    assert report.holds
    assert check_law(leq(sasaki_and(x, y), y), fig1, ("1", "2"), budget) == report


@pytest.mark.slow
def test_workers_find_the_same_witness(fig1, le5):
    q = Var("q")
    law = leq(q, Apply("H", frame_induced_quadruple(fig1, le5).H, q))

    assert len(plan(Domain(fig1, 5, 1), 10**6).chunks()) > 1

    serial = check_law(law, fig1, le5.points)
    parallel = check_law(law, fig1, le5.points, Budget(workers=3))

    assert serial.failed
    assert parallel == serial
    assert parallel.witness.describe() == serial.witness.describe()
