"""Reproduces the worked examples as aligned text tables."""

from . import fixtures
from .errors import UnknownDemo
from .extension import extend_frame, extend_prop_PF
from .fixtures import example1_p, example1_q, example2_operators, le
from .induction import induce_R1, induce_R3, starred_quadruple
from .lattice import Oml
from .tense import FrameInduced, OperatorQuadruple, Proposition, Tense, compose, frame_induced_quadruple, op_equal
from .write import format_table, write_frame


def operator_table(lattice: Oml, ops: OperatorQuadruple, name: str, q: Proposition, starred: OperatorQuadruple | None = None) -> str:
    """Rows q(t) and A(q)(t) for each operator, each followed by A*(q)(t) when starred operators are given."""
    rows = [(f"{name}(t)", [lattice.names[x] for x in q.values])]

    for symbol, operator in ops.items():
        rows.append((f"{symbol}({name})(t)", [lattice.names[x] for x in operator(q).values]))

        if starred is not None:
            rows.append((f"{symbol}*({name})(t)", [lattice.names[x] for x in starred[symbol](q).values]))

    return format_table(("t", list(ops.points)), rows)


def example1() -> str:
    fig1 = fixtures.lattice("fig1")
    ops = frame_induced_quadruple(fig1, le(5))

    return "\n\n".join(operator_table(fig1, ops, name, q) for name, q in (("p", example1_p(fig1)), ("q", example1_q(fig1))))


def example1_dynamic_pairs() -> str:
    fig1 = fixtures.lattice("fig1")
    ops = frame_induced_quadruple(fig1, le(5))
    PG, GP = compose(ops.P, ops.G), compose(ops.G, ops.P)
    tables = []

    for name, q in (("p", example1_p(fig1)), ("q", example1_q(fig1))):
        rows = [
            (f"{name}(t)", [fig1.names[x] for x in q.values]),
            (f"PG({name})(t)", [fig1.names[x] for x in PG(q).values]),
            (f"GP({name})(t)", [fig1.names[x] for x in GP(q).values]),
        ]
        tables.append(format_table(("t", list(ops.points)), rows))

    return "\n\n".join(tables)


def example2() -> str:
    fig1 = fixtures.lattice("fig1")
    ops = example2_operators(fig1)
    induced = induce_R3(fig1, ops)
    starred = starred_quadruple(fig1, induced)

    relation = write_frame(induced.frame("example2-induced"))
    table = operator_table(fig1, ops, "p", example1_p(fig1), starred)
    equalities = "\n".join(f"{s}* = {s}: {'yes' if op_equal(starred[s], a) else 'no'}" for s, a in ops.items())

    return "\n\n".join([relation, table, equalities])


def example_final() -> str:
    fig1 = fixtures.lattice("fig1")
    base = le(5)
    ops = frame_induced_quadruple(fig1, base)
    ef = extend_frame(induce_R1(fig1, ops.P, ops.F).frame(base.name))
    p = example1_p(fig1)

    p_bar = extend_prop_PF(fig1, p, ops.P, ops.F, ef)
    rows = [("pbar(t)", [fig1.names[x] for x in p_bar.values])]

    for symbol in ("P", "F"):
        image = FrameInduced(fig1, ef.bar, Tense[symbol])(p_bar)
        rows.append((f"{symbol}bar(pbar)(t)", [fig1.names[x] for x in image.values]))

    return format_table(("t", list(ef.bar.points)), rows)


DEMOS = {
    "example1": example1,
    "example1-pg": example1_dynamic_pairs,
    "example2": example2,
    "example-final": example_final,
}


def demo(name: str) -> str:
    if name not in DEMOS:
        raise UnknownDemo(f'"{name}" is not a demo, expected one of {", ".join(DEMOS)}')

    return DEMOS[name]()
