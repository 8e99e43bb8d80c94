"""Time-preference relations induced by given tense operators, and the constructions built on them."""

import logging
from dataclasses import dataclass, field
from functools import partial

import numpy as np

from .config import Budget
from .errors import EmptyRelation
from .lattice import Oml
from .laws import Relation
from .quantify import Chunk, Domain, Plan, plan, scan
from .report import Verdict, VerifyReport, Witness, combine, skipped
from .tense import OperatorQuadruple, Proposition, TenseOperator, compare_operators, frame_induced_quadruple
from .timeframe import TimeFrame, frame_from_matrix

logger = logging.getLogger(__name__)

# inequality -> (operator symbol, broadcast of (q, A(q)) to (rows, s, t) operands of <=)
INEQUALITIES = {
    "q(s) <= P(q)(t)": ("P", lambda q, a: (q[:, :, None], a[:, None, :])),
    "q(t) <= F(q)(s)": ("F", lambda q, a: (q[:, None, :], a[:, :, None])),
    "H(q)(t) <= q(s)": ("H", lambda q, a: (a[:, None, :], q[:, :, None])),
    "G(q)(s) <= q(t)": ("G", lambda q, a: (a[:, :, None], q[:, None, :])),
}

R1 = ("q(s) <= P(q)(t)", "q(t) <= F(q)(s)")
R2 = ("H(q)(t) <= q(s)", "G(q)(s) <= q(t)")
R3 = R1 + R2


@dataclass(frozen=True)
class PairWitness:
    proposition: Proposition
    inequality: str
    left: str
    right: str


@dataclass(frozen=True, eq=False)
class InducedRelationReport:
    """The induced pair set; an upper bound of the true relation when sampled."""

    lattice: Oml
    points: tuple[str, ...]
    matrix: np.ndarray
    exhaustive: bool
    samples: int | None
    witnesses: dict[tuple[int, int], PairWitness] = field(default_factory=dict)
    name: str = "induced"

    @property
    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset((int(s), int(t)) for s, t in np.argwhere(self.matrix))

    @property
    def empty(self) -> bool:
        return not self.matrix.any()

    def frame(self, name: str | None = None) -> TimeFrame:
        if self.empty:
            raise EmptyRelation(f'Relation "{name or self.name}" induced by the given operators is empty')

        return frame_from_matrix(name or self.name, self.points, self.matrix)

    def named_pairs(self) -> list[tuple[str, str]]:
        return [(self.points[s], self.points[t]) for s, t in sorted(self.pairs)]

    def describe_witness(self, s: int, t: int) -> str:
        witness = self.witnesses[(s, t)]
        return (
            f"({self.points[s]}, {self.points[t]}) excluded by q = {witness.proposition.render(self.lattice)}: "
            f"{witness.inequality} fails with {witness.left} vs {witness.right}"
        )


def __violations(lattice: Oml, inequality: str, q: np.ndarray, ops: dict[str, TenseOperator]) -> np.ndarray:
    symbol, operands = INEQUALITIES[inequality]
    lower, upper = operands(q, ops[symbol].evaluate(q))

    return ~lattice.leq[lower, upper]


def __first_exclusions(inequalities: tuple[str, ...], ops: dict[str, TenseOperator], plan: Plan, chunk: Chunk) -> tuple[np.ndarray, np.ndarray]:
    """Per (s, t): ordinal of the first excluding proposition in this chunk (-1 for none) and which inequality."""
    (q,) = plan.assignments(chunk)
    lattice = plan.domain.lattice
    size = plan.domain.size

    first = np.full((size, size), -1, dtype=np.int64)
    which = np.full((size, size), -1, dtype=np.int64)

    for k, inequality in enumerate(inequalities):
        bad = __violations(lattice, inequality, q, ops)
        hit = bad.any(axis=0)
        row = chunk.start + bad.argmax(axis=0)
        better = hit & ((first < 0) | (row < first))
        first[better] = row[better]
        which[better] = k

    return first, which


def __induce(
    lattice: Oml,
    ops: dict[str, TenseOperator],
    inequalities: tuple[str, ...],
    budget: Budget,
    exhaustive: bool,
    name: str,
) -> InducedRelationReport:
    points = next(iter(ops.values())).points
    size = len(points)
    scan_plan = plan(Domain(lattice, size, 1), budget.propositions, budget.seed, exhaustive)

    first = np.full((size, size), -1, dtype=np.int64)
    which = np.full((size, size), -1, dtype=np.int64)

    for chunk_first, chunk_which in scan(partial(__first_exclusions, inequalities, ops), scan_plan, budget.workers):
        fresh = (first < 0) & (chunk_first >= 0)
        first[fresh] = chunk_first[fresh]
        which[fresh] = chunk_which[fresh]

    witnesses = {}

    for s, t in np.argwhere(first >= 0):
        (values,) = scan_plan.assignment(int(first[s, t]))
        q = values[None, :]
        inequality = inequalities[int(which[s, t])]
        symbol, operands = INEQUALITIES[inequality]
        lower, upper = np.broadcast_arrays(*operands(q, ops[symbol].evaluate(q)))
        witnesses[(int(s), int(t))] = PairWitness(
            Proposition(tuple(int(v) for v in values)),
            inequality,
            lattice.names[int(lower[0, s, t])],
            lattice.names[int(upper[0, s, t])],
        )

    matrix = first < 0

    if not scan_plan.exhaustive:
        logger.warning("Unable to enumerate all %d propositions, induced relation is an upper bound", scan_plan.domain.count)

    return InducedRelationReport(lattice, points, matrix, scan_plan.exhaustive, scan_plan.samples, witnesses, name)


def induce_R1(lattice: Oml, P: TenseOperator, F: TenseOperator, budget: Budget = Budget(), exhaustive: bool = False) -> InducedRelationReport:
    """Pairs with q(s) <= P(q)(t) and q(t) <= F(q)(s) for every proposition q."""
    return __induce(lattice, {"P": P, "F": F}, R1, budget, exhaustive, "R1")


def induce_R2(lattice: Oml, H: TenseOperator, G: TenseOperator, budget: Budget = Budget(), exhaustive: bool = False) -> InducedRelationReport:
    """Pairs with H(q)(t) <= q(s) and G(q)(s) <= q(t) for every proposition q."""
    return __induce(lattice, {"H": H, "G": G}, R2, budget, exhaustive, "R2")


def induce_R3(lattice: Oml, ops: OperatorQuadruple, budget: Budget = Budget(), exhaustive: bool = False) -> InducedRelationReport:
    """The intersection of the R1 and R2 relations, computed in a single scan."""
    return __induce(lattice, dict(ops.items()), R3, budget, exhaustive, "R3")


def indicator_proposition(lattice: Oml, f: TimeFrame, u: str) -> Proposition:
    index = f.index(u)
    return Proposition(tuple(lattice.top if t == index else lattice.bottom for t in range(f.size)))


def starred_quadruple(lattice: Oml, relation: InducedRelationReport) -> OperatorQuadruple:
    induced = relation.frame()
    return frame_induced_quadruple(lattice, induced, f"{induced.name}*")


def __replay_pair(f: TimeFrame, induced: InducedRelationReport, s: int, t: int) -> tuple[str, ...]:
    lines = [
        f"({f.points[s]}, {f.points[t]}) in R: {'yes' if f.matrix[s, t] else 'no'}",
        f"({f.points[s]}, {f.points[t]}) in R3: {'yes' if induced.matrix[s, t] else 'no'}",
    ]

    if (s, t) in induced.witnesses:
        lines.append(induced.describe_witness(s, t))

    return tuple(lines)


def roundtrip_frame(lattice: Oml, f: TimeFrame, budget: Budget = Budget()) -> VerifyReport:
    """Re-induces a frame from its own operators and checks that both the relation and the operators come back."""
    ops = frame_induced_quadruple(lattice, f)
    induced = induce_R3(lattice, ops, budget, exhaustive=True)
    instance = f"{lattice.name} | {f.name}"

    differences = np.argwhere(induced.matrix != f.matrix)

    if differences.size > 0:
        s, t = (int(v) for v in differences[0])
        witness = Witness(
            "R3 = R",
            (("pair", f"({f.points[s]}, {f.points[t]})"),),
            None,
            "in R" if f.matrix[s, t] else "not in R",
            "in R3" if induced.matrix[s, t] else "not in R3",
            partial(__replay_pair, f, induced, s, t),
        )
        return VerifyReport("thm4-roundtrip", instance, Verdict.FAIL, witness=witness)

    starred = starred_quadruple(lattice, induced)
    details = [VerifyReport("R3 = R", instance, Verdict.PASS)]

    for (symbol, operator), (_, star) in zip(ops.items(), starred.items()):
        report = compare_operators(star, operator, Relation.EQ, budget, (f"{symbol}*", symbol), instance, exhaustive=True)
        details.append(report)

    return combine("thm4-roundtrip", instance, details)


@dataclass(frozen=True)
class FrameInducible:
    frame: TimeFrame


@dataclass(frozen=True)
class NotFrameInducible:
    reason: str
    operator: str | None = None
    witness: Witness | None = None


Inducibility = FrameInducible | NotFrameInducible


def classify_inducibility(lattice: Oml, ops: OperatorQuadruple, budget: Budget = Budget()) -> Inducibility:
    """Either the operators are exactly those of their R3 frame or the first differing (operator, q, s) is returned."""
    induced = induce_R3(lattice, ops, budget, exhaustive=True)

    if induced.empty:
        return NotFrameInducible("induced relation is empty")

    starred = starred_quadruple(lattice, induced)

    for (symbol, operator), (_, star) in zip(ops.items(), starred.items()):
        report = compare_operators(star, operator, Relation.EQ, budget, (f"{symbol}*", symbol), ops.name, exhaustive=True)

        if report.failed:
            return NotFrameInducible(f"{symbol}* differs from {symbol}", symbol, report.witness)

    return FrameInducible(induced.frame(f"{ops.name}-induced"))


def __starred_comparisons(
    suite: str,
    lattice: Oml,
    ops: OperatorQuadruple,
    induced: InducedRelationReport,
    checks: tuple[tuple[str, bool], ...],
    budget: Budget,
) -> VerifyReport:
    """Each check is (symbol, starred_below); starred_below asserts S* <= S, otherwise S <= S*."""
    instance = ops.name

    if induced.empty:
        return skipped(suite, instance, f"induced relation {induced.name} is empty")

    starred = starred_quadruple(lattice, induced)
    details = []
    notes = []

    for symbol, starred_below in checks:
        operator, star = ops[symbol], starred[symbol]
        names = (f"{symbol}*", symbol)

        if starred_below:
            report = compare_operators(star, operator, Relation.LEQ, budget, names, instance, exhaustive=True)
        else:
            report = compare_operators(operator, star, Relation.LEQ, budget, names[::-1], instance, exhaustive=True)

        details.append(report)

        equal = compare_operators(star, operator, Relation.EQ, budget, names, instance, exhaustive=True)
        notes.append((f"{symbol}* = {symbol}", "yes" if equal.holds else "no"))

    return combine(suite, instance, details, tuple(notes))


def check_star_inequalities(lattice: Oml, ops: OperatorQuadruple, budget: Budget = Budget()) -> VerifyReport:
    """P* <= P, F* <= F, H <= H* and G <= G* for the operators of the R3 frame, with equality notes."""
    induced = induce_R3(lattice, ops, budget, exhaustive=True)
    checks = (("P", True), ("F", True), ("H", False), ("G", False))

    return __starred_comparisons("cor1", lattice, ops, induced, checks, budget)


def check_past_future_star(lattice: Oml, ops: OperatorQuadruple, budget: Budget = Budget()) -> VerifyReport:
    """P* <= P and F* <= F for the operators of the R1 frame."""
    induced = induce_R1(lattice, ops.P, ops.F, budget, exhaustive=True)

    return __starred_comparisons("thm8", lattice, ops, induced, (("P", True), ("F", True)), budget)


def check_always_star(lattice: Oml, ops: OperatorQuadruple, budget: Budget = Budget()) -> VerifyReport:
    """H <= H* and G <= G* for the operators of the R2 frame."""
    induced = induce_R2(lattice, ops.H, ops.G, budget, exhaustive=True)

    return __starred_comparisons("thm9", lattice, ops, induced, (("H", False), ("G", False)), budget)
