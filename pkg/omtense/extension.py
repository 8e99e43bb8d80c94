"""Extended time frames with a past copy and a future copy of every time point."""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .config import Budget
from .errors import MalformedSpec, NameCollision
from .induction import InducedRelationReport, induce_R1, induce_R2
from .lattice import Oml
from .laws import Apply, Var, check_law, eq
from .report import Verdict, VerifyReport, combine, skipped
from .tense import FrameInduced, Proposition, Tense, TenseOperator
from .timeframe import TimeFrame, restrict


class Zone(Enum):
    PAST = "past"
    BASE = "base"
    FUTURE = "future"


@dataclass(frozen=True)
class ExtendedFrame:
    base: TimeFrame
    bar: TimeFrame
    zones: tuple[Zone, ...]  # zone of every bar point

    @property
    def size(self) -> int:
        return self.base.size


def extend_frame(f: TimeFrame) -> ExtendedFrame:
    """Bar points are ordered past copies (t1), base points, future copies (t2)."""
    m = f.size
    past = tuple(f"{t}1" for t in f.points)
    future = tuple(f"{t}2" for t in f.points)

    for copy in past + future:
        if copy in f.points:
            raise NameCollision(f'Time frame "{f.name}" already has a time point named "{copy}"')

    pairs = {(s, m + s) for s in range(m)}
    pairs |= {(m + s, m + t) for s, t in f.pairs}
    pairs |= {(m + s, 2 * m + s) for s in range(m)}

    bar = TimeFrame(past + f.points + future, frozenset(pairs), f"{f.name}-bar")
    zones = (Zone.PAST,) * m + (Zone.BASE,) * m + (Zone.FUTURE,) * m

    return ExtendedFrame(f, bar, zones)


def __extend(ef: ExtendedFrame, q: Proposition, lower: TenseOperator, upper: TenseOperator) -> np.ndarray:
    if len(q) != ef.size:
        raise MalformedSpec(f"Proposition of length {len(q)} over {ef.size} time points")

    batch = np.array([q.values], dtype=np.intp)
    return np.concatenate([lower.evaluate(batch), batch, upper.evaluate(batch)], axis=1)


def extend_prop_PF(lattice: Oml, q: Proposition, P: TenseOperator, F: TenseOperator, ef: ExtendedFrame) -> Proposition:
    """P(q) on the past copies, q itself on T and F(q) on the future copies."""
    extended = __extend(ef, q, P, F)
    return Proposition(tuple(int(v) for v in extended[0]))


def extend_prop_HG(lattice: Oml, q: Proposition, H: TenseOperator, G: TenseOperator, ef: ExtendedFrame) -> Proposition:
    extended = __extend(ef, q, H, G)
    return Proposition(tuple(int(v) for v in extended[0]))


def restrict_prop(ef: ExtendedFrame, q: Proposition) -> Proposition:
    return Proposition(q.values[ef.size : 2 * ef.size])


@dataclass(frozen=True, eq=False)
class ExtendedRestriction(TenseOperator):
    """q -> (W̄(q̄))|T where W̄ is induced by the extended frame and q̄ is built with lower and upper."""

    extended: ExtendedFrame
    which: Tense
    lower: TenseOperator
    upper: TenseOperator

    @property
    def points(self) -> tuple[str, ...]:
        return self.extended.base.points

    def evaluate(self, batch: np.ndarray) -> np.ndarray:
        induced = FrameInduced(self.lattice, self.extended.bar, self.which)
        extended = np.concatenate([self.lower.evaluate(batch), batch, self.upper.evaluate(batch)], axis=1)

        return induced.evaluate(extended)[:, self.extended.size : 2 * self.extended.size]


def __check_extension(
    suite: str,
    lattice: Oml,
    induced: InducedRelationReport,
    symbols: tuple[str, str],
    lower: TenseOperator,
    upper: TenseOperator,
    budget: Budget,
) -> VerifyReport:
    instance = f"{lattice.name} | {induced.name}"

    if induced.empty:
        return skipped(suite, instance, f"induced relation {induced.name} is empty")

    base = induced.frame()
    ef = extend_frame(base)

    restricted = restrict(ef.bar, base.points)
    verdict = Verdict.PASS if restricted.pairs == base.pairs else Verdict.FAIL
    details = [VerifyReport(f"{base.name}-bar restricted to T = {base.name}", instance, verdict)]

    q = Var("q")

    for symbol, which, given in ((symbols[0], Tense[symbols[0]], lower), (symbols[1], Tense[symbols[1]], upper)):
        restriction = ExtendedRestriction(lattice, ef, which, lower, upper)
        law = eq(Apply(f"{symbol}bar|T", restriction, q), Apply(symbol, given, q))
        details.append(check_law(law, lattice, base.points, budget, instance, exhaustive=True))

    return combine(suite, instance, details)


def check_extension_PF(lattice: Oml, P: TenseOperator, F: TenseOperator, budget: Budget = Budget()) -> VerifyReport:
    """Extends the R1 frame of P and F and checks that the extended operators restrict back to P and F."""
    induced = induce_R1(lattice, P, F, budget, exhaustive=True)
    return __check_extension("ext-pf", lattice, induced, ("P", "F"), P, F, budget)


def check_extension_HG(lattice: Oml, H: TenseOperator, G: TenseOperator, budget: Budget = Budget()) -> VerifyReport:
    induced = induce_R2(lattice, H, G, budget, exhaustive=True)
    return __check_extension("ext-hg", lattice, induced, ("H", "G"), H, G, budget)
