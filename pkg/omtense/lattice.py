import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property, partial, reduce

import networkx as nx
import numpy as np

from .errors import (
    CycleInCovers,
    MalformedSpec,
    NoOrtho,
    NotALattice,
    NotBounded,
    NotOrthomodular,
    OrthoViolation,
    UnknownElement,
)
from .report import Verdict, VerifyReport, Witness

logger = logging.getLogger(__name__)

Element = int  # index into Oml.names

ORTHOMODULAR_LAW = "x <= y implies y = x ∨ (y ∧ x')"


@dataclass(frozen=True)
class LatticeSpec:
    name: str
    elements: tuple[str, ...]
    covers: tuple[tuple[str, str], ...]  # (lower, upper)
    ortho: tuple[tuple[str, str], ...] = ()  # (x, x')


@dataclass(frozen=True, eq=False)
class Oml:
    """Finite bounded lattice with dense join/meet tables and an optional orthocomplementation.

    Elements are indices in declaration order. All arrays are read-only.
    """

    name: str
    names: tuple[str, ...]
    leq: np.ndarray  # leq[x, y] is x <= y
    join: np.ndarray
    meet: np.ndarray
    comp: np.ndarray | None
    bottom: Element
    top: Element
    orthomodular: bool

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def is_ortho(self) -> bool:
        return self.comp is not None

    @cached_property
    def __indices(self) -> dict[str, Element]:
        return {name: i for i, name in enumerate(self.names)}

    def index(self, name: str) -> Element:
        try:
            return self.__indices[name]
        except KeyError:
            raise UnknownElement(f'"{name}" is not an element of lattice "{self.name}"') from None

    def name_of(self, x: Element) -> str:
        return self.names[x]

    def render(self, values: Sequence[Element]) -> str:
        return "(" + ", ".join(self.names[v] for v in values) + ")"

    @cached_property
    def sasaki(self) -> tuple[np.ndarray, np.ndarray]:
        """Dense tables of x ⊙ y = (x ∨ y') ∧ y and x → y = (y ∧ x) ∨ x'."""
        comp = require_ortho(self)

        x = np.arange(self.n)[:, None]
        y = np.arange(self.n)[None, :]

        conjunction = self.meet[self.join[x, comp[y]], y]
        implication = self.join[self.meet[y, x], comp[x]]

        conjunction.setflags(write=False)
        implication.setflags(write=False)

        return conjunction, implication


def __validate(spec: LatticeSpec) -> dict[str, Element]:
    index: dict[str, Element] = {}

    for i, name in enumerate(spec.elements):
        if name in index:
            raise MalformedSpec(f'Element "{name}" is declared twice in lattice "{spec.name}"')

        index[name] = i

    if not index:
        raise MalformedSpec(f'Lattice "{spec.name}" has no elements')

    for pair in spec.covers + spec.ortho:
        for name in pair:
            if name not in index:
                raise UnknownElement(f'"{name}" is not an element of lattice "{spec.name}"')

    return index


def __order(spec: LatticeSpec, index: dict[str, Element]) -> np.ndarray:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(index)))
    graph.add_edges_from((index[lower], index[upper]) for lower, upper in spec.covers)

    if not nx.is_directed_acyclic_graph(graph):
        cycle = [(spec.elements[u], spec.elements[v]) for u, v in nx.find_cycle(graph)]
        raise CycleInCovers(f'Covers of lattice "{spec.name}" contain a cycle through "{cycle[0][0]}"', cycle)

    closure = nx.transitive_closure(graph, reflexive=True)

    leq = np.zeros((len(index), len(index)), dtype=bool)

    for u, v in closure.edges:
        leq[u, v] = True

    return leq


def __bound_table(order: np.ndarray, spec: LatticeSpec, kind: str) -> np.ndarray:
    # bounds[i, j, z]: i <= z and j <= z under the given order
    bounds = order[:, None, :] & order[None, :, :]

    # z is the least bound iff every bound w satisfies z <= w
    covered = bounds.astype(np.int32) @ order.T.astype(np.int32)
    least = bounds & (covered == bounds.sum(axis=2)[:, :, None])

    missing = np.argwhere(~least.any(axis=2))

    if missing.size > 0:
        i, j = missing[0]
        pair = (spec.elements[i], spec.elements[j])
        raise NotALattice(f'"{pair[0]}" and "{pair[1]}" have no {kind} in lattice "{spec.name}"', pair)

    return least.argmax(axis=2)


def __complement_table(spec: LatticeSpec, index: dict[str, Element]) -> np.ndarray | None:
    if not spec.ortho:
        return None

    comp = np.full(len(index), -1, dtype=np.intp)

    for x_name, y_name in spec.ortho:
        x, y = index[x_name], index[y_name]

        for a, b in ((x, y), (y, x)):
            if comp[a] not in (-1, b):
                raise MalformedSpec(f'Ortho pairing of "{spec.elements[a]}" in lattice "{spec.name}" is not an involution')

            comp[a] = b

    missing = np.flatnonzero(comp < 0)

    if missing.size > 0:
        raise MalformedSpec(f'Element "{spec.elements[missing[0]]}" of lattice "{spec.name}" has no orthocomplement')

    return comp


def __check_ortho(spec: LatticeSpec, leq: np.ndarray, join: np.ndarray, meet: np.ndarray, comp: np.ndarray, bottom: int, top: int) -> None:
    names = spec.elements

    # antitone: x <= y implies y' <= x'
    antitone = leq[np.ix_(comp, comp)].T
    bad = np.argwhere(leq & ~antitone)

    if bad.size > 0:
        x, y = bad[0]
        raise OrthoViolation(f'Complementation of lattice "{spec.name}" is not antitone at "{names[x]}" <= "{names[y]}"', (names[x], names[y]))

    indices = np.arange(len(names))
    bad = np.flatnonzero((join[indices, comp] != top) | (meet[indices, comp] != bottom))

    if bad.size > 0:
        x = bad[0]
        raise OrthoViolation(f'"{names[comp[x]]}" is not a complement of "{names[x]}" in lattice "{spec.name}"', (names[x],))


def __orthomodular_violations(leq: np.ndarray, join: np.ndarray, meet: np.ndarray, comp: np.ndarray) -> np.ndarray:
    x = np.arange(len(comp))[:, None]
    y = np.arange(len(comp))[None, :]
    value = join[x, meet[y, comp[x]]]

    return leq & (value != y)


def __freeze(*arrays: np.ndarray | None) -> None:
    for array in arrays:
        if array is not None:
            array.setflags(write=False)


def build_lattice(spec: LatticeSpec, require_orthomodular: bool = True) -> Oml:
    index = __validate(spec)

    leq = __order(spec, index)

    bottoms = np.flatnonzero(leq.all(axis=1))
    tops = np.flatnonzero(leq.all(axis=0))

    if bottoms.size == 0:
        raise NotBounded(f'Lattice "{spec.name}" has no least element')

    if tops.size == 0:
        raise NotBounded(f'Lattice "{spec.name}" has no greatest element')

    join = __bound_table(leq, spec, "least upper bound")
    meet = __bound_table(leq.T, spec, "greatest lower bound")

    comp = __complement_table(spec, index)
    orthomodular = False

    if comp is not None:
        __check_ortho(spec, leq, join, meet, comp, int(bottoms[0]), int(tops[0]))

        violations = np.argwhere(__orthomodular_violations(leq, join, meet, comp))
        orthomodular = violations.size == 0

        if not orthomodular and require_orthomodular:
            x, y = violations[0]
            witness = (spec.elements[x], spec.elements[y])
            raise NotOrthomodular(f'Lattice "{spec.name}" violates the orthomodular law at "{witness[0]}" <= "{witness[1]}"', witness)

    elif require_orthomodular:
        raise NoOrtho(f'Lattice "{spec.name}" has no orthocomplementation')

    __freeze(leq, join, meet, comp)

    logger.debug("Built lattice %s with %d elements", spec.name, len(index))

    return Oml(spec.name, tuple(spec.elements), leq, join, meet, comp, int(bottoms[0]), int(tops[0]), orthomodular)


def spec_of(lattice: Oml) -> LatticeSpec:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(lattice.n))
    graph.add_edges_from((int(x), int(y)) for x, y in np.argwhere(lattice.leq) if x != y)

    covers = sorted(nx.transitive_reduction(graph).edges)

    ortho = ()

    if lattice.comp is not None:
        ortho = tuple((lattice.names[x], lattice.names[lattice.comp[x]]) for x in range(lattice.n) if x <= lattice.comp[x])

    return LatticeSpec(
        lattice.name,
        lattice.names,
        tuple((lattice.names[x], lattice.names[y]) for x, y in covers),
        ortho,
    )


def __check_element(lattice: Oml, x: Element) -> None:
    if not 0 <= x < lattice.n:
        raise UnknownElement(f'Element index {x} is out of range for lattice "{lattice.name}"')


def join_set(lattice: Oml, elements: Iterable[Element]) -> Element:
    def join(x: Element, y: Element) -> Element:
        __check_element(lattice, y)
        return int(lattice.join[x, y])

    return reduce(join, elements, lattice.bottom)


def meet_set(lattice: Oml, elements: Iterable[Element]) -> Element:
    def meet(x: Element, y: Element) -> Element:
        __check_element(lattice, y)
        return int(lattice.meet[x, y])

    return reduce(meet, elements, lattice.top)


def require_ortho(lattice: Oml) -> np.ndarray:
    if lattice.comp is None:
        raise NoOrtho(f'Lattice "{lattice.name}" has no orthocomplementation')

    return lattice.comp


def complement(lattice: Oml, x: Element) -> Element:
    comp = require_ortho(lattice)
    __check_element(lattice, x)

    return int(comp[x])


def __replay_orthomodular(lattice: Oml, x: Element, y: Element) -> tuple[str, ...]:
    names = lattice.names
    x_comp = int(lattice.comp[x])
    inner = int(lattice.meet[y, x_comp])
    value = int(lattice.join[x, inner])

    return (
        f"x = {names[x]}",
        f"y = {names[y]}",
        f"x <= y holds: {'yes' if lattice.leq[x, y] else 'no'}",
        f"x' = {names[x_comp]}",
        f"y ∧ x' = {names[inner]}",
        f"x ∨ (y ∧ x') = {names[value]}",
        f"y = x ∨ (y ∧ x') holds: {'yes' if value == y else 'no'}",
    )


def check_orthomodular(lattice: Oml) -> VerifyReport:
    comp = require_ortho(lattice)

    violations = np.argwhere(__orthomodular_violations(lattice.leq, lattice.join, lattice.meet, comp))

    if violations.size == 0:
        return VerifyReport("oml-law", lattice.name, Verdict.PASS)

    x, y = (int(v) for v in violations[0])
    value = int(lattice.join[x, lattice.meet[y, comp[x]]])

    witness = Witness(
        ORTHOMODULAR_LAW,
        (("x", lattice.names[x]), ("y", lattice.names[y])),
        None,
        lattice.names[y],
        lattice.names[value],
        partial(__replay_orthomodular, lattice, x, y),
    )

    return VerifyReport("oml-law", lattice.name, Verdict.FAIL, witness=witness)
