from abc import ABC, abstractmethod
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from enum import Enum
from itertools import islice, product
from typing import Literal

import numpy as np

from .config import Budget
from .errors import MalformedSpec, TabulatedMiss, UnknownElement, UnknownTimePoint
from .lattice import Element, Oml, require_ortho
from .laws import Apply, Law, Relation, Var, check_law
from .report import VerifyReport
from .sasaki import conjunction, implication
from .timeframe import TimeFrame


class Tense(Enum):
    P = "P"  # it has at some time been the case
    F = "F"  # it will at some time be the case
    H = "H"  # it has always been the case
    G = "G"  # it will always be the case

    @property
    def past(self) -> bool:
        return self in (Tense.P, Tense.H)

    @property
    def joins(self) -> bool:
        return self in (Tense.P, Tense.F)


@dataclass(frozen=True)
class Proposition:
    """A time-indexed proposition q: T -> L stored as one element per time point."""

    values: tuple[Element, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, t: int) -> Element:
        return self.values[t]

    @staticmethod
    def constant(x: Element, size: int) -> "Proposition":
        return Proposition((x,) * size)

    def render(self, lattice: Oml) -> str:
        return lattice.render(self.values)


def proposition(lattice: Oml, names: list[str] | tuple[str, ...]) -> Proposition:
    return Proposition(tuple(lattice.index(n) for n in names))


@dataclass(frozen=True, eq=False)
class TenseOperator(ABC):
    lattice: Oml

    @property
    @abstractmethod
    def points(self) -> tuple[str, ...]:
        pass

    @property
    def size(self) -> int:
        return len(self.points)

    @abstractmethod
    def evaluate(self, batch: np.ndarray) -> np.ndarray:
        """Maps a (rows, |T|) batch of propositions to their images."""

    def __call__(self, q: Proposition) -> Proposition:
        return apply(self, q)


@dataclass(frozen=True, eq=False)
class FrameInduced(TenseOperator):
    frame: TimeFrame
    which: Tense

    @property
    def points(self) -> tuple[str, ...]:
        return self.frame.points

    def evaluate(self, batch: np.ndarray) -> np.ndarray:
        table = self.lattice.join if self.which.joins else self.lattice.meet
        unit = self.lattice.bottom if self.which.joins else self.lattice.top
        out = np.empty_like(batch)

        for s in range(self.size):
            neighbours = self.frame.predecessors(s) if self.which.past else self.frame.successors(s)
            column = np.full(batch.shape[0], unit, dtype=batch.dtype)

            for t in neighbours:
                column = table[column, batch[:, t]]

            out[:, s] = column

        return out


@dataclass(frozen=True, eq=False)
class IdentityElseConstant(TenseOperator):
    """Keeps q(s) at the special time points and is constant elsewhere."""

    point_names: tuple[str, ...]
    special: frozenset[int]
    shape: Literal["join", "meet"] = "join"

    @property
    def points(self) -> tuple[str, ...]:
        return self.point_names

    @property
    def default(self) -> Element:
        """Join-like operators are the top element off the special points, meet-like ones the bottom."""
        return self.lattice.top if self.shape == "join" else self.lattice.bottom

    def evaluate(self, batch: np.ndarray) -> np.ndarray:
        out = np.full_like(batch, self.default)
        special = sorted(self.special)
        out[:, special] = batch[:, special]

        return out


def identity_else_constant(
    lattice: Oml,
    points: tuple[str, ...],
    special: list[str] | tuple[str, ...],
    shape: Literal["join", "meet"],
) -> IdentityElseConstant:
    index = {p: i for i, p in enumerate(points)}

    for p in special:
        if p not in index:
            raise UnknownTimePoint(f'"{p}" is not one of the time points {", ".join(points)}')

    return IdentityElseConstant(lattice, tuple(points), frozenset(index[p] for p in special), shape)


def identity_operator(lattice: Oml, points: tuple[str, ...]) -> IdentityElseConstant:
    return IdentityElseConstant(lattice, tuple(points), frozenset(range(len(points))))


@dataclass(frozen=True, eq=False)
class Tabulated(TenseOperator):
    point_names: tuple[str, ...]
    table: Mapping[tuple[Element, ...], tuple[Element, ...]]

    @property
    def points(self) -> tuple[str, ...]:
        return self.point_names

    def evaluate(self, batch: np.ndarray) -> np.ndarray:
        out = np.empty_like(batch)

        for row, values in enumerate(batch):
            key = tuple(int(v) for v in values)

            try:
                out[row] = self.table[key]
            except KeyError:
                raise TabulatedMiss(f"Operator table has no entry for {self.lattice.render(key)}") from None

        return out


@dataclass(frozen=True, eq=False)
class Composed(TenseOperator):
    outer: TenseOperator
    inner: TenseOperator

    @property
    def points(self) -> tuple[str, ...]:
        return self.inner.points

    def evaluate(self, batch: np.ndarray) -> np.ndarray:
        return self.outer.evaluate(self.inner.evaluate(batch))


@dataclass(frozen=True, eq=False)
class OperatorQuadruple:
    P: TenseOperator
    F: TenseOperator
    H: TenseOperator
    G: TenseOperator
    name: str = "operators"

    def __post_init__(self) -> None:
        operators = self.items()
        lattice, points = operators[0][1].lattice, operators[0][1].points

        for symbol, operator in operators:
            if operator.lattice is not lattice:
                raise MalformedSpec(f'Operator {symbol} of "{self.name}" is over a different lattice')

            if operator.points != points:
                raise MalformedSpec(f'Operator {symbol} of "{self.name}" is over different time points')

    @property
    def lattice(self) -> Oml:
        return self.P.lattice

    @property
    def points(self) -> tuple[str, ...]:
        return self.P.points

    def items(self) -> list[tuple[str, TenseOperator]]:
        return [("P", self.P), ("F", self.F), ("H", self.H), ("G", self.G)]

    def __getitem__(self, symbol: str) -> TenseOperator:
        return dict(self.items())[symbol]


def frame_induced_quadruple(lattice: Oml, f: TimeFrame, name: str | None = None) -> OperatorQuadruple:
    return OperatorQuadruple(
        FrameInduced(lattice, f, Tense.P),
        FrameInduced(lattice, f, Tense.F),
        FrameInduced(lattice, f, Tense.H),
        FrameInduced(lattice, f, Tense.G),
        name or f.name,
    )


def __check_proposition(lattice: Oml, size: int, q: Proposition) -> None:
    if len(q) != size:
        raise MalformedSpec(f"Proposition of length {len(q)} over {size} time points")

    for x in q.values:
        if not 0 <= x < lattice.n:
            raise UnknownElement(f'Element index {x} is out of range for lattice "{lattice.name}"')


def apply(operator: TenseOperator, q: Proposition) -> Proposition:
    __check_proposition(operator.lattice, operator.size, q)

    return Proposition(tuple(int(v) for v in operator.evaluate(np.array([q.values], dtype=np.intp))[0]))


def eval_P(lattice: Oml, f: TimeFrame, q: Proposition) -> Proposition:
    return apply(FrameInduced(lattice, f, Tense.P), q)


def eval_F(lattice: Oml, f: TimeFrame, q: Proposition) -> Proposition:
    return apply(FrameInduced(lattice, f, Tense.F), q)


def eval_H(lattice: Oml, f: TimeFrame, q: Proposition) -> Proposition:
    return apply(FrameInduced(lattice, f, Tense.H), q)


def eval_G(lattice: Oml, f: TimeFrame, q: Proposition) -> Proposition:
    return apply(FrameInduced(lattice, f, Tense.G), q)


def compose(outer: TenseOperator, inner: TenseOperator) -> Composed:
    return Composed(inner.lattice, outer, inner)


def prop_leq(lattice: Oml, x: Proposition, y: Proposition) -> bool:
    return bool(lattice.leq[list(x.values), list(y.values)].all())


def pointwise_complement(lattice: Oml, q: Proposition) -> Proposition:
    comp = require_ortho(lattice)
    return Proposition(tuple(int(comp[x]) for x in q.values))


def prop_sasaki_and(lattice: Oml, x: Proposition, y: Proposition) -> Proposition:
    return Proposition(tuple(int(v) for v in conjunction(lattice, list(x.values), list(y.values))))


def prop_sasaki_imp(lattice: Oml, x: Proposition, y: Proposition) -> Proposition:
    return Proposition(tuple(int(v) for v in implication(lattice, list(x.values), list(y.values))))


def enumerate_propositions(lattice: Oml, size: int, part: int = 0, parts: int = 1) -> Iterator[Proposition]:
    """Yields L^T in odometer order (first time point most significant, bottom first).

    With parts > 1 only the part-th of that many contiguous slices is produced.
    """
    alphabet = [lattice.bottom] + [x for x in range(lattice.n) if x != lattice.bottom]
    count = lattice.n**size
    start, stop = count * part // parts, count * (part + 1) // parts

    for values in islice(product(alphabet, repeat=size), start, stop):
        yield Proposition(values)


def compare_operators(
    a: TenseOperator,
    b: TenseOperator,
    relation: Relation = Relation.LEQ,
    budget: Budget = Budget(),
    symbols: tuple[str, str] = ("A", "B"),
    instance: str = "",
    exhaustive: bool = False,
) -> VerifyReport:
    q = Var("q")
    law = Law(Apply(symbols[0], a, q), relation, Apply(symbols[1], b, q))

    return check_law(law, a.lattice, a.points, budget, instance, exhaustive)


def op_leq(a: TenseOperator, b: TenseOperator, budget: Budget = Budget(), sample: bool = False) -> bool:
    """A <= B pointwise on every proposition. Raises BudgetExceeded rather than sampling unless asked."""
    report = compare_operators(a, b, Relation.LEQ, budget, exhaustive=not sample)
    return report.holds


def op_equal(a: TenseOperator, b: TenseOperator, budget: Budget = Budget(), sample: bool = False) -> bool:
    report = compare_operators(a, b, Relation.EQ, budget, exhaustive=not sample)
    return report.holds
