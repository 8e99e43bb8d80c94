from omtense import fixtures
from omtense.lattice import build_lattice
from omtense.read import parse_frame, parse_lattice, parse_operators, parse_propositions
from omtense.tense import Proposition, frame_induced_quadruple
from omtense.write import format_table, write_frame, write_lattice, write_operators, write_proposition


def test_format_table():
    text = format_table(("t", ["1", "22"]), [("q(t)", ["a'", "0"]), ("P(q)(t)", ["1", "b"])])

    assert text.splitlines() == [
        "t       | 1  | 22",
        "--------+----+---",
        "q(t)    | a' | 0",
        "P(q)(t) | 1  | b",
    ]


def test_write_lattice(fig1):
    text = write_lattice(fig1)

    assert text.splitlines()[0] == "lattice fig1"
    assert text.splitlines()[1] == "elements 0 a b c d c' b' a' d' 1"
    assert text.splitlines()[-1] == "ortho 0:1 a:a' b:b' c:c' d:d'"
    assert build_lattice(parse_lattice(text)).names == fig1.names


def test_write_frame():
    f = fixtures.example2_relation()

    assert write_frame(f) == "frame example2\npoints 1 2 3 4 5\nrel 1>1 2>2 3>3 3>4 3>5 4>3 4>4 4>5 5>3 5>4 5>5"
    assert parse_frame(write_frame(f)) == f


def test_write_proposition(fig1, le5):
    p = fixtures.example1_p(fig1)
    text = write_proposition("p", p, fig1, le5.points)

    assert text == "prop p = 1:c' 2:b' 3:c' 4:a' 5:b'"
    assert parse_propositions(text, fig1, le5.points) == {"p": p}


def test_write_operators(chain2):
    ops = frame_induced_quadruple(chain2, fixtures.le(2), "le2-ops")
    text = write_operators(ops)
    lines = text.splitlines()

    assert lines[:4] == ["operators le2-ops", "points 1 2", "op P", "0 0 -> 0 0"]
    assert "1 0 -> 1 1" in lines
    assert len(lines) == 2 + 4 * 5

    parsed = parse_operators(text, chain2)

    assert parsed.F(Proposition((0, 1))) == ops.F(Proposition((0, 1)))
