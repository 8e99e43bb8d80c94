import pytest

from omtense import fixtures
from omtense.errors import EmptyRelation, EmptyRestriction, MalformedSpec, UnknownTimePoint
from omtense.timeframe import frame, is_reflexive, is_serial, is_transitive, restrict


def test_le5(le5):
    assert le5.size == 5
    assert is_serial(le5)
    assert is_reflexive(le5)
    assert is_transitive(le5)
    assert list(le5.predecessors(2)) == [0, 1, 2]
    assert list(le5.successors(2)) == [2, 3, 4]


def test_example2_relation_is_an_equivalence():
    f = fixtures.example2_relation()

    assert f.reflexive and f.transitive
    assert f.named_pairs()[:3] == [("1", "1"), ("2", "2"), ("3", "3")]
    assert len(f.pairs) == 11


def test_conditions():
    chain = frame("chain", ("1", "2", "3"), [("1", "2"), ("2", "3")])
    loop = frame("loop", ("1", "2"), [("1", "2"), ("2", "1")])

    assert not chain.serial
    assert not chain.reflexive
    assert not chain.transitive
    assert loop.serial
    assert not loop.transitive


def test_equality_ignores_name():
    assert frame("a", ("1", "2"), [("1", "2")]) == frame("b", ("1", "2"), [("1", "2")])


def test_unknown_point():
    with pytest.raises(UnknownTimePoint):
        frame("f", ("1", "2"), [("1", "3")])

    with pytest.raises(UnknownTimePoint):
        fixtures.le(2).index("3")


def test_empty_frames():
    with pytest.raises(EmptyRelation):
        frame("f", ("1", "2"), [])

    with pytest.raises(EmptyRelation):
        frame("f", (), [])


def test_duplicate_point():
    with pytest.raises(MalformedSpec):
        frame("f", ("1", "1"), [("1", "1")])


def test_restrict(le5):
    sub = restrict(le5, ["4", "2"])

    assert sub.points == ("2", "4")
    assert sub.named_pairs() == [("2", "2"), ("2", "4"), ("4", "4")]

    with pytest.raises(EmptyRestriction):
        restrict(le5, [])

    with pytest.raises(UnknownTimePoint):
        restrict(le5, ["9"])

    with pytest.raises(EmptyRestriction):
        restrict(frame("f", ("1", "2"), [("1", "2")]), ["1"])
