"""Built-in lattices, frames, propositions and operators of the worked examples."""

from .errors import MalformedSpec, UnknownElement
from .lattice import LatticeSpec, Oml, build_lattice
from .tense import OperatorQuadruple, Proposition, identity_else_constant, proposition
from .timeframe import TimeFrame, frame

CHAIN2 = LatticeSpec("chain2", ("0", "1"), (("0", "1"),), (("0", "1"),))

BOOLEAN4 = LatticeSpec(
    "boolean4",
    ("0", "a", "a'", "1"),
    (("0", "a"), ("0", "a'"), ("a", "1"), ("a'", "1")),
    (("0", "1"), ("a", "a'")),
)

BOOLEAN8 = LatticeSpec(
    "boolean8",
    ("0", "a", "b", "c", "a'", "b'", "c'", "1"),
    (
        ("0", "a"), ("0", "b"), ("0", "c"),
        ("a", "b'"), ("a", "c'"), ("b", "a'"), ("b", "c'"), ("c", "a'"), ("c", "b'"),
        ("a'", "1"), ("b'", "1"), ("c'", "1"),
    ),
    (("0", "1"), ("a", "a'"), ("b", "b'"), ("c", "c'")),
)  # fmt: skip

# two incomparable complemented pairs, the smallest non-distributive orthomodular lattice
MO2 = LatticeSpec(
    "mo2",
    ("0", "a", "b", "b'", "a'", "1"),
    (("0", "a"), ("0", "b"), ("0", "b'"), ("0", "a'"), ("a", "1"), ("b", "1"), ("b'", "1"), ("a'", "1")),
    (("0", "1"), ("a", "a'"), ("b", "b'")),
)

# a Boolean cube glued at 0 and 1 with the four-element block {0, d, d', 1}
FIG1 = LatticeSpec(
    "fig1",
    ("0", "a", "b", "c", "d", "c'", "b'", "a'", "d'", "1"),
    (
        ("0", "a"), ("0", "b"), ("0", "c"), ("0", "d"), ("0", "d'"),
        ("a", "b'"), ("a", "c'"), ("b", "a'"), ("b", "c'"), ("c", "a'"), ("c", "b'"),
        ("a'", "1"), ("b'", "1"), ("c'", "1"), ("d", "1"), ("d'", "1"),
    ),
    (("0", "1"), ("a", "a'"), ("b", "b'"), ("c", "c'"), ("d", "d'")),
)  # fmt: skip

# orthocomplemented but not orthomodular
O6 = LatticeSpec(
    "o6",
    ("0", "x", "y", "y'", "x'", "1"),
    (("0", "x"), ("x", "y"), ("y", "1"), ("0", "y'"), ("y'", "x'"), ("x'", "1")),
    (("0", "1"), ("x", "x'"), ("y", "y'")),
)

LATTICES = {spec.name: spec for spec in (CHAIN2, BOOLEAN4, BOOLEAN8, MO2, FIG1, O6)}


def lattice(name: str) -> Oml:
    try:
        spec = LATTICES[name]
    except KeyError:
        raise UnknownElement(f'"{name}" is not a built-in lattice') from None

    return build_lattice(spec, require_orthomodular=spec is not O6)


def points(n: int) -> tuple[str, ...]:
    return tuple(str(t) for t in range(1, n + 1))


def le(n: int) -> TimeFrame:
    """The usual order on {1, ..., n}."""
    return frame(f"le{n}", points(n), ((str(s), str(t)) for s in range(1, n + 1) for t in range(s, n + 1)))


def example2_relation() -> TimeFrame:
    blocks = (("1",), ("2",), ("3", "4", "5"))
    return frame("example2", points(5), ((s, t) for block in blocks for s in block for t in block))


def example1_p(fig1: Oml) -> Proposition:
    return proposition(fig1, ("c'", "b'", "c'", "a'", "b'"))


def example1_q(fig1: Oml) -> Proposition:
    return proposition(fig1, ("a", "b'", "d", "a", "a'"))


def example2_operators(lattice: Oml, size: int = 5) -> OperatorQuadruple:
    """P and G keep q(2), F and H keep q(1); P, F are 1 and H, G are 0 everywhere else."""
    if size < 2:
        raise MalformedSpec(f"The example operators need at least 2 time points, got {size}")

    names = points(size)

    return OperatorQuadruple(
        identity_else_constant(lattice, names, ("2",), "join"),
        identity_else_constant(lattice, names, ("1",), "join"),
        identity_else_constant(lattice, names, ("1",), "meet"),
        identity_else_constant(lattice, names, ("2",), "meet"),
        "example2",
    )
