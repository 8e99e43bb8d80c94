import pytest

from omtense import fixtures
from omtense.errors import MalformedSpec, NameCollision
from omtense.extension import (
    ExtendedRestriction,
    Zone,
    check_extension_HG,
    check_extension_PF,
    extend_frame,
    extend_prop_HG,
    extend_prop_PF,
    restrict_prop,
)
from omtense.report import Verdict
from omtense.tense import FrameInduced, Proposition, Tense, frame_induced_quadruple, identity_else_constant
from omtense.timeframe import frame, restrict


def test_extend_frame():
    ef = extend_frame(frame("f", ("1", "2"), [("1", "2")]))

    assert ef.bar.points == ("11", "21", "1", "2", "12", "22")
    assert ef.bar.named_pairs() == [("11", "1"), ("21", "2"), ("1", "2"), ("1", "12"), ("2", "22")]
    assert ef.zones == (Zone.PAST, Zone.PAST, Zone.BASE, Zone.BASE, Zone.FUTURE, Zone.FUTURE)
    assert ef.bar.name == "f-bar"
    assert restrict(ef.bar, ef.base.points) == ef.base


def test_name_collision():
    with pytest.raises(NameCollision):
        extend_frame(frame("f", ("1", "11"), [("1", "11")]))


def test_example_final(fig1, le5):
    ops = frame_induced_quadruple(fig1, le5)
    ef = extend_frame(le5)
    p = fixtures.example1_p(fig1)
    p_bar = extend_prop_PF(fig1, p, ops.P, ops.F, ef)

    assert p_bar.render(fig1) == "(c', 1, 1, 1, 1, c', b', c', a', b', 1, 1, 1, 1, b')"
    assert restrict_prop(ef, p_bar) == p
    assert FrameInduced(fig1, ef.bar, Tense.P)(p_bar).render(fig1) == "(0, 0, 0, 0, 0, c', 1, 1, 1, 1, c', b', c', a', b')"


def test_extend_prop_HG(fig1, le5):
    ops = frame_induced_quadruple(fig1, le5)
    ef = extend_frame(le5)
    p = fixtures.example1_p(fig1)
    p_bar = extend_prop_HG(fig1, p, ops.H, ops.G, ef)

    assert p_bar.values[:5] == ops.H(p).values
    assert p_bar.values[10:] == ops.G(p).values

    with pytest.raises(MalformedSpec):
        extend_prop_HG(fig1, Proposition((0, 0)), ops.H, ops.G, ef)


def test_restriction_operator(fig1, le5):
    ops = frame_induced_quadruple(fig1, le5)
    ef = extend_frame(le5)
    p = fixtures.example1_p(fig1)

    restriction = ExtendedRestriction(fig1, ef, Tense.F, ops.P, ops.F)

    assert restriction.points == le5.points
    assert restriction(p) == ops.F(p)


def test_extension_on_a_frame(boolean4):
    ops = frame_induced_quadruple(boolean4, fixtures.le(4))

    assert check_extension_PF(boolean4, ops.P, ops.F).verdict is Verdict.PASS
    assert check_extension_HG(boolean4, ops.H, ops.G).verdict is Verdict.PASS


def test_extension_of_example2(boolean4):
    ops = fixtures.example2_operators(boolean4)
    report = check_extension_PF(boolean4, ops.P, ops.F)

    assert report.verdict is Verdict.PASS
    assert [d.suite for d in report.details] == ["R1-bar restricted to T = R1", "Pbar|T(q) = P(q)", "Fbar|T(q) = F(q)"]


def test_extension_skips_empty_relations(chain2):
    zero = identity_else_constant(chain2, fixtures.points(2), [], "meet")
    report = check_extension_PF(chain2, zero, zero)

    assert report.verdict is Verdict.SKIPPED
    assert report.reason == "induced relation R1 is empty"
