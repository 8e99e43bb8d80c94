"""A small term language for tense-algebra laws and the quantified checker behind every verification."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, partial
from typing import TYPE_CHECKING

import numpy as np

from .config import Budget
from .lattice import Element, Oml, require_ortho
from .quantify import Chunk, Domain, Plan, plan, scan
from .report import Verdict, VerifyReport, Witness
from .sasaki import conjunction, implication

if TYPE_CHECKING:
    from .tense import TenseOperator


class Connective(Enum):
    SASAKI_AND = "⊙"
    SASAKI_IMP = "→"
    MEET = "∧"
    JOIN = "∨"


class Term(ABC):
    @property
    @abstractmethod
    def label(self) -> str:
        pass

    @abstractmethod
    def evaluate(self, lattice: Oml, env: dict[str, np.ndarray], rows: int, size: int) -> np.ndarray:
        """Values of shape (rows, size) under a batch of assignments."""

    def children(self) -> tuple["Term", ...]:
        return ()

    def subterms(self) -> list["Term"]:
        """Post-order, each label once."""
        seen: dict[str, Term] = {}

        def visit(term: Term) -> None:
            for child in term.children():
                visit(child)

            seen.setdefault(term.label, term)

        visit(self)

        return list(seen.values())

    def variables(self) -> set[str]:
        return set().union(*(c.variables() for c in self.children())) if self.children() else set()


@dataclass(frozen=True)
class Var(Term):
    name: str

    @property
    def label(self) -> str:
        return self.name

    def evaluate(self, lattice: Oml, env: dict[str, np.ndarray], rows: int, size: int) -> np.ndarray:
        return env[self.name]

    def variables(self) -> set[str]:
        return {self.name}


@dataclass(frozen=True)
class Const(Term):
    element: Element
    name: str

    @property
    def label(self) -> str:
        return self.name

    def evaluate(self, lattice: Oml, env: dict[str, np.ndarray], rows: int, size: int) -> np.ndarray:
        return np.full((rows, size), self.element, dtype=np.intp)


@dataclass(frozen=True, eq=False)
class Apply(Term):
    symbol: str
    operator: "TenseOperator"
    argument: Term

    @property
    def label(self) -> str:
        return f"{self.symbol}({self.argument.label})"

    def children(self) -> tuple[Term, ...]:
        return (self.argument,)

    def evaluate(self, lattice: Oml, env: dict[str, np.ndarray], rows: int, size: int) -> np.ndarray:
        return self.operator.evaluate(self.argument.evaluate(lattice, env, rows, size))


@dataclass(frozen=True)
class Binary(Term):
    connective: Connective
    left: Term
    right: Term

    @property
    def label(self) -> str:
        return f"({self.left.label} {self.connective.value} {self.right.label})"

    def children(self) -> tuple[Term, ...]:
        return (self.left, self.right)

    def evaluate(self, lattice: Oml, env: dict[str, np.ndarray], rows: int, size: int) -> np.ndarray:
        x = self.left.evaluate(lattice, env, rows, size)
        y = self.right.evaluate(lattice, env, rows, size)

        match self.connective:
            case Connective.SASAKI_AND:
                return conjunction(lattice, x, y)
            case Connective.SASAKI_IMP:
                return implication(lattice, x, y)
            case Connective.MEET:
                return lattice.meet[x, y]
            case Connective.JOIN:
                return lattice.join[x, y]


@dataclass(frozen=True)
class Complement(Term):
    argument: Term

    @property
    def label(self) -> str:
        inner = self.argument.label
        return f"{inner}'" if isinstance(self.argument, (Var, Const)) else f"({inner})'"

    def children(self) -> tuple[Term, ...]:
        return (self.argument,)

    def evaluate(self, lattice: Oml, env: dict[str, np.ndarray], rows: int, size: int) -> np.ndarray:
        return require_ortho(lattice)[self.argument.evaluate(lattice, env, rows, size)]


def sasaki_and(x: Term, y: Term) -> Binary:
    return Binary(Connective.SASAKI_AND, x, y)


def sasaki_imp(x: Term, y: Term) -> Binary:
    return Binary(Connective.SASAKI_IMP, x, y)


def meet(x: Term, y: Term) -> Binary:
    return Binary(Connective.MEET, x, y)


def join(x: Term, y: Term) -> Binary:
    return Binary(Connective.JOIN, x, y)


class Relation(Enum):
    LEQ = "<="
    EQ = "="


@dataclass(frozen=True)
class Law:
    left: Term
    relation: Relation
    right: Term
    premise: tuple[Term, Term] | None = None  # pointwise order that must hold at every time point
    name: str | None = None

    @property
    def title(self) -> str:
        if self.name is not None:
            return self.name

        body = f"{self.left.label} {self.relation.value} {self.right.label}"

        if self.premise is None:
            return body

        return f"{self.premise[0].label} <= {self.premise[1].label} implies {body}"

    @cached_property
    def variables(self) -> tuple[str, ...]:
        terms = [self.left, self.right] + list(self.premise or ())
        return tuple(sorted(set().union(*(t.variables() for t in terms))))

    def violations(self, lattice: Oml, env: dict[str, np.ndarray], rows: int, size: int) -> np.ndarray:
        left = self.left.evaluate(lattice, env, rows, size)
        right = self.right.evaluate(lattice, env, rows, size)

        if self.relation is Relation.LEQ:
            bad = ~lattice.leq[left, right]
        else:
            bad = left != right

        if self.premise is not None:
            lower = self.premise[0].evaluate(lattice, env, rows, size)
            upper = self.premise[1].evaluate(lattice, env, rows, size)
            bad &= lattice.leq[lower, upper].all(axis=1)[:, None]

        return bad


def leq(left: Term, right: Term, premise: tuple[Term, Term] | None = None) -> Law:
    return Law(left, Relation.LEQ, right, premise)


def eq(left: Term, right: Term, premise: tuple[Term, Term] | None = None) -> Law:
    return Law(left, Relation.EQ, right, premise)


def __first_violation(law: Law, plan: Plan, chunk: Chunk) -> tuple[int, int] | None:
    domain = plan.domain
    env = dict(zip(law.variables, plan.assignments(chunk)))
    hits = np.argwhere(law.violations(domain.lattice, env, len(chunk), domain.size))

    if hits.size == 0:
        return None

    return chunk.start + int(hits[0, 0]), int(hits[0, 1])


def __render(lattice: Oml, values: np.ndarray, element_level: bool) -> str:
    return lattice.names[int(values[0])] if element_level else lattice.render(values)


def __replay(
    law: Law,
    lattice: Oml,
    points: tuple[str, ...] | None,
    assignment: tuple[tuple[int, ...], ...],
    point: int,
) -> tuple[str, ...]:
    size = len(points) if points is not None else 1
    env = {v: np.array([values], dtype=np.intp) for v, values in zip(law.variables, assignment)}
    element_level = points is None

    terms = [law.left, law.right] + list(law.premise or ())
    seen: set[str] = set()
    lines = []

    for term in terms:
        for sub in term.subterms():
            if sub.label in seen:
                continue

            seen.add(sub.label)
            values = sub.evaluate(lattice, env, 1, size)[0]
            lines.append(f"{sub.label} = {__render(lattice, values, element_level)}")

    left = int(law.left.evaluate(lattice, env, 1, size)[0, point])
    right = int(law.right.evaluate(lattice, env, 1, size)[0, point])
    location = "" if element_level else f" at t={points[point]}"
    holds = not bool(law.violations(lattice, env, 1, size)[0, point])

    lines.append(f"{law.left.label}{location} = {lattice.names[left]}")
    lines.append(f"{law.right.label}{location} = {lattice.names[right]}")
    lines.append(f"{law.title}{location} holds: {'yes' if holds else 'no'}")

    return tuple(lines)


def check_law(
    law: Law,
    lattice: Oml,
    points: tuple[str, ...] | None = None,
    budget: Budget = Budget(),
    instance: str = "",
    exhaustive: bool = False,
) -> VerifyReport:
    """Quantifies a law over every assignment of its variables.

    Without points the variables range over lattice elements. Otherwise they range over propositions on
    those time points and the law is read pointwise. The witness is the first violating assignment in
    odometer order, then the first violating time point.
    """
    size = len(points) if points is not None else 1
    arity = len(law.variables)
    scan_plan = plan(Domain(lattice, size, arity), budget.limit(arity), budget.seed, exhaustive)

    hits = [h for h in scan(partial(__first_violation, law), scan_plan, budget.workers) if h is not None]

    if not hits:
        verdict = Verdict.PASS if scan_plan.exhaustive else Verdict.ONE_SIDED
        return VerifyReport(law.title, instance, verdict, samples=scan_plan.samples)

    ordinal, point = min(hits)
    assignment = tuple(tuple(int(v) for v in values) for values in scan_plan.assignment(ordinal))

    env = {v: np.array([values], dtype=np.intp) for v, values in zip(law.variables, assignment)}
    left = int(law.left.evaluate(lattice, env, 1, size)[0, point])
    right = int(law.right.evaluate(lattice, env, 1, size)[0, point])

    witness = Witness(
        law.title,
        tuple((v, __render(lattice, np.array(values), points is None)) for v, values in zip(law.variables, assignment)),
        None if points is None else points[point],
        lattice.names[left],
        lattice.names[right],
        partial(__replay, law, lattice, points, assignment, point),
    )

    return VerifyReport(law.title, instance, Verdict.FAIL, witness=witness, samples=scan_plan.samples)
