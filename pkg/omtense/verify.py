"""Named theorem suites run as quantified law checks on a concrete lattice and frame or operator quadruple."""

import logging
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from itertools import product, repeat

from .config import Budget
from .errors import BudgetExceeded, NotAFailure, PreconditionUnmet
from .extension import check_extension_HG, check_extension_PF
from .induction import check_always_star, check_past_future_star, check_star_inequalities, induce_R3, roundtrip_frame, starred_quadruple
from .lattice import Oml, check_orthomodular
from .laws import Apply, Complement, Const, Law, Term, Var, check_law, eq, join, leq, meet, sasaki_and, sasaki_imp
from .report import Trace, Verdict, VerifyReport, combine, skipped
from .tense import OperatorQuadruple, TenseOperator, frame_induced_quadruple
from .timeframe import TimeFrame

logger = logging.getLogger(__name__)


class Suite(Enum):
    THM1 = "thm1"
    THM2 = "thm2"
    THM3 = "thm3"
    PROP1 = "prop1"
    LEMMA1 = "lemma1"
    THM6 = "thm6"
    THM7 = "thm7"
    THM4_ROUNDTRIP = "thm4-roundtrip"
    COR1 = "cor1"
    THM8 = "thm8"
    THM9 = "thm9"
    DYNAMIC = "dynamic"
    EXT_PF = "ext-pf"
    EXT_HG = "ext-hg"
    DEMORGAN = "demorgan"
    OML_LAW = "oml-law"

    @property
    def needs_frame(self) -> bool:
        return self in (Suite.THM1, Suite.THM2, Suite.THM3, Suite.THM7, Suite.THM4_ROUNDTRIP)

    @property
    def needs_operators(self) -> bool:
        return self in (Suite.THM6, Suite.COR1, Suite.THM8, Suite.THM9, Suite.DYNAMIC, Suite.EXT_PF, Suite.EXT_HG)

    @property
    def needs_ortho(self) -> bool:
        return self in (Suite.DEMORGAN, Suite.OML_LAW)

    @property
    def needs_orthomodular(self) -> bool:
        return self in (Suite.PROP1, Suite.LEMMA1, Suite.THM6, Suite.THM7)

    @property
    def frame_conditions(self) -> tuple[str, ...]:
        match self:
            case Suite.THM1 | Suite.THM2:
                return ("serial",)
            case Suite.THM3 | Suite.THM7:
                return ("reflexive",)
            case _:
                return ()


@dataclass(frozen=True, eq=False)
class Instance:
    lattice: Oml
    frame: TimeFrame | None = None
    operators: OperatorQuadruple | None = None
    budget: Budget = field(default_factory=Budget)

    @cached_property
    def quadruple(self) -> OperatorQuadruple | None:
        if self.operators is not None:
            return self.operators

        if self.frame is not None:
            return frame_induced_quadruple(self.lattice, self.frame)

        return None

    @cached_property
    def frame_operators(self) -> OperatorQuadruple | None:
        return None if self.frame is None else frame_induced_quadruple(self.lattice, self.frame)

    @property
    def name(self) -> str:
        if self.operators is not None:
            source = self.operators.name
        elif self.frame is not None:
            source = self.frame.name
        else:
            source = "-"

        return f"{self.lattice.name} | {source} | budget {self.budget.propositions}/{self.budget.pairs} seed {self.budget.seed}"


def __check_preconditions(suite: Suite, instance: Instance) -> None:
    lattice = instance.lattice

    if suite.needs_frame and instance.frame is None:
        raise PreconditionUnmet("requires a time frame")

    if suite.needs_operators and instance.quadruple is None:
        raise PreconditionUnmet("requires a time frame or tense operators")

    if (suite.needs_ortho or suite.needs_orthomodular) and not lattice.is_ortho:
        raise PreconditionUnmet("requires an orthocomplemented lattice")

    if suite.needs_orthomodular and not lattice.orthomodular:
        raise PreconditionUnmet("requires an orthomodular lattice")

    for condition in suite.frame_conditions:
        if not getattr(instance.frame, condition):
            raise PreconditionUnmet(f"requires {condition} R")


def __check_laws(title: str, instance: Instance, laws: Iterable[Law], points: tuple[str, ...] | None) -> VerifyReport:
    reports = [check_law(law, instance.lattice, points, instance.budget, instance.name) for law in laws]
    return combine(title, instance.name, reports)


def __op(ops: OperatorQuadruple, symbol: str, term: Term) -> Apply:
    return Apply(symbol, ops[symbol], term)


def bound_laws(lattice: Oml, ops: OperatorQuadruple) -> list[Law]:
    bottom = Const(lattice.bottom, lattice.names[lattice.bottom])
    top = Const(lattice.top, lattice.names[lattice.top])

    return [eq(Apply(s, a, c), c) for c in (bottom, top) for s, a in ops.items()]


def monotone_laws(ops: OperatorQuadruple) -> list[Law]:
    p, q = Var("p"), Var("q")
    return [leq(Apply(s, a, p), Apply(s, a, q), premise=(p, q)) for s, a in ops.items()]


def dynamic_pair_laws(ops: OperatorQuadruple) -> list[Law]:
    q = Var("q")

    return [
        leq(__op(ops, "P", __op(ops, "G", q)), q),
        leq(q, __op(ops, "G", __op(ops, "P", q))),
        leq(__op(ops, "F", __op(ops, "H", q)), q),
        leq(q, __op(ops, "H", __op(ops, "F", q))),
    ]


def past_future_laws(ops: OperatorQuadruple) -> list[Law]:
    q = Var("q")
    return [leq(__op(ops, "H", q), __op(ops, "P", q)), leq(__op(ops, "G", q), __op(ops, "F", q))]


def reflexive_laws(ops: OperatorQuadruple) -> list[Law]:
    """H(q) <= q <= P(q) and G(q) <= q <= F(q)."""
    q = Var("q")

    return [
        leq(__op(ops, "H", q), q),
        leq(q, __op(ops, "P", q)),
        leq(__op(ops, "G", q), q),
        leq(q, __op(ops, "F", q)),
    ]


def __thm1(instance: Instance) -> VerifyReport:
    ops, points = instance.frame_operators, instance.frame.points

    return combine(
        Suite.THM1.value,
        instance.name,
        [
            __check_laws("(i) bounds", instance, bound_laws(instance.lattice, ops), points),
            __check_laws("(ii) monotone", instance, monotone_laws(ops), points),
            __check_laws("(iii) dynamic pairs", instance, dynamic_pair_laws(ops), points),
        ],
    )


def __thm2(instance: Instance) -> VerifyReport:
    ops, points = instance.frame_operators, instance.frame.points

    details = [__check_laws("(i) H <= P and G <= F", instance, past_future_laws(ops), points)]

    if instance.frame.reflexive:
        details.append(__check_laws("(ii) H(q) <= q <= P(q) and G(q) <= q <= F(q)", instance, reflexive_laws(ops), points))
    else:
        details.append(skipped("(ii) H(q) <= q <= P(q) and G(q) <= q <= F(q)", instance.name, "requires reflexive R"))

    return combine(Suite.THM2.value, instance.name, details)


def __thm3(instance: Instance) -> VerifyReport:
    ops, points = instance.frame_operators, instance.frame.points
    q = Var("q")

    growing = [leq(__op(ops, a, q), __op(ops, a, __op(ops, b, q))) for a in "PFHG" for b in "PF"]
    shrinking = [leq(__op(ops, a, __op(ops, c, q)), __op(ops, a, q)) for a in "PFHG" for c in "HG"]
    details = [__check_laws("(i) A <= AB and AC <= A", instance, growing + shrinking, points)]

    if instance.frame.transitive:
        idempotent = [eq(__op(ops, a, __op(ops, a, q)), __op(ops, a, q)) for a in "PFHG"]
        details.append(__check_laws("(ii) AA = A", instance, idempotent, points))
    else:
        details.append(skipped("(ii) AA = A", instance.name, "requires transitive R"))

    return combine(Suite.THM3.value, instance.name, details)


def __prop1(instance: Instance) -> VerifyReport:
    lattice = instance.lattice
    a, b, c = Var("a"), Var("b"), Var("c")
    bottom = Const(lattice.bottom, lattice.names[lattice.bottom])
    top = Const(lattice.top, lattice.names[lattice.top])

    return combine(
        Suite.PROP1.value,
        instance.name,
        [
            __check_laws("(i) unit", instance, [eq(sasaki_and(a, top), a), eq(sasaki_and(top, a), a)], None),
            __check_laws(
                "(ii) left adjointness",
                instance,
                [
                    leq(a, sasaki_imp(b, c), premise=(sasaki_and(a, b), c)),
                    leq(sasaki_and(a, b), c, premise=(a, sasaki_imp(b, c))),
                ],
                None,
            ),
            __check_laws("(iii) complement", instance, [eq(Complement(a), sasaki_imp(a, bottom))], None),
            __check_laws(
                "projections",
                instance,
                [leq(sasaki_and(a, b), b), eq(sasaki_imp(a, b), Complement(sasaki_and(Complement(b), a)))],
                None,
            ),
        ],
    )


def __lemma1(instance: Instance) -> VerifyReport:
    a, b = Var("a"), Var("b")

    return combine(
        Suite.LEMMA1.value,
        instance.name,
        [
            __check_laws("(i)", instance, [eq(sasaki_and(sasaki_imp(a, b), a), meet(a, b))], None),
            __check_laws("(ii)", instance, [leq(a, sasaki_imp(b, sasaki_and(a, b)))], None),
        ],
    )


def check_thm6_equivalence(
    lattice: Oml,
    operator: TenseOperator,
    symbol: str = "A",
    budget: Budget = Budget(),
    instance: str = "",
) -> VerifyReport:
    """A(x) ⊙ A(y) <= A(x ⊙ y) for all x, y holds exactly when A(x → y) <= A(x) → A(y) does."""
    x, y = Var("x"), Var("y")

    def a(term: Term) -> Apply:
        return Apply(symbol, operator, term)

    first = check_law(leq(sasaki_and(a(x), a(y)), a(sasaki_and(x, y))), lattice, operator.points, budget, instance)
    second = check_law(leq(a(sasaki_imp(x, y)), sasaki_imp(a(x), a(y))), lattice, operator.points, budget, instance)

    notes = (("(i) holds", __holds(first)), ("(ii) holds", __holds(second)))
    title = f"{symbol}: (i) iff (ii)"

    if first.failed == second.failed:
        sampled = first.verdict is Verdict.ONE_SIDED or second.verdict is Verdict.ONE_SIDED
        verdict = Verdict.ONE_SIDED if sampled else Verdict.PASS
        samples = first.samples if sampled else None
        return VerifyReport(title, instance, verdict, samples=samples, notes=notes, details=(first, second))

    refuted, unrefuted = (first, second) if first.failed else (second, first)

    if unrefuted.verdict is Verdict.ONE_SIDED:
        return VerifyReport(title, instance, Verdict.ONE_SIDED, samples=unrefuted.samples, notes=notes, details=(first, second))

    return VerifyReport(title, instance, Verdict.FAIL, witness=refuted.witness, notes=notes, details=(first, second))


def __thm6(instance: Instance) -> VerifyReport:
    ops = instance.quadruple
    reports = [check_thm6_equivalence(instance.lattice, a, s, instance.budget, instance.name) for s, a in ops.items()]

    return combine(Suite.THM6.value, instance.name, reports)


def thm7_laws(ops: OperatorQuadruple) -> list[tuple[str, list[Law]]]:
    """Every item with all four instantiations of its two operator metavariables."""
    p, q = Var("p"), Var("q")
    future, past = "PF", "HG"

    def o(symbol: str, term: Term) -> Apply:
        return __op(ops, symbol, term)

    return [
        ("(i)", [leq(p, sasaki_imp(q, o(a1, sasaki_and(o(a2, p), q)))) for a1, a2 in product(future, future)]),
        ("(ii)", [leq(o(b, sasaki_and(p, q)), sasaki_and(o(a, p), q)) for a, b in product(future, past)]),
        ("(iii)", [leq(o(b, p), sasaki_imp(q, o(a, sasaki_and(p, q)))) for a, b in product(future, past)]),
        ("(iv)", [leq(o(b1, sasaki_and(o(b2, p), q)), sasaki_and(p, q)) for b1, b2 in product(past, past)]),
        ("(v)", [leq(sasaki_imp(p, q), o(a1, sasaki_imp(p, o(a2, q)))) for a1, a2 in product(future, future)]),
        ("(vi)", [leq(sasaki_and(o(b, sasaki_imp(p, q)), p), o(a, q)) for a, b in product(future, past)]),
        ("(vii)", [leq(sasaki_imp(p, o(b, q)), o(a, sasaki_imp(p, q))) for a, b in product(future, past)]),
        ("(viii)", [leq(sasaki_and(o(b1, sasaki_imp(p, o(b2, q))), p), q) for b1, b2 in product(past, past)]),
    ]


def __thm7(instance: Instance) -> VerifyReport:
    points = instance.frame.points
    items = [__check_laws(item, instance, laws, points) for item, laws in thm7_laws(instance.frame_operators)]

    return combine(Suite.THM7.value, instance.name, items)


def __demorgan(instance: Instance) -> VerifyReport:
    x, y = Var("x"), Var("y")
    details = [
        __check_laws(
            "lattice",
            instance,
            [
                eq(Complement(join(x, y)), meet(Complement(x), Complement(y))),
                eq(Complement(meet(x, y)), join(Complement(x), Complement(y))),
                eq(Complement(Complement(x)), x),
            ],
            None,
        )
    ]

    if instance.frame is not None:
        ops, q = instance.frame_operators, Var("q")
        duality = [
            eq(__op(ops, "H", q), Complement(__op(ops, "P", Complement(q)))),
            eq(__op(ops, "G", q), Complement(__op(ops, "F", Complement(q)))),
        ]
        details.append(__check_laws("tense duality", instance, duality, instance.frame.points))
    else:
        details.append(skipped("tense duality", instance.name, "requires frame-induced operators"))

    return combine(Suite.DEMORGAN.value, instance.name, details)


def __oml_law(instance: Instance) -> VerifyReport:
    x, y = Var("x"), Var("y")
    lattice = instance.lattice

    primary = check_orthomodular(lattice)
    primary = replace(primary, suite="y = x ∨ (y ∧ x') when x <= y", instance=instance.name)
    dual = check_law(eq(x, meet(y, join(x, Complement(y))), premise=(x, y)), lattice, None, instance.budget, instance.name)
    agree = "yes" if primary.failed == dual.failed else "no"

    return combine(Suite.OML_LAW.value, instance.name, [primary, dual], (("forms agree", agree),))


def operator_conditions(ops: OperatorQuadruple, budget: Budget = Budget(), instance: str = "") -> VerifyReport:
    """Whether H(q) <= q <= P(q) and G(q) <= q <= F(q) hold for every q."""
    reports = [check_law(law, ops.lattice, ops.points, budget, instance) for law in reflexive_laws(ops)]
    return combine("H(q) <= q <= P(q) and G(q) <= q <= F(q)", instance, reports)


def __holds(report: VerifyReport) -> str:
    if report.verdict is Verdict.PASS:
        return "yes"

    if report.verdict is Verdict.ONE_SIDED:
        return f"not refuted in {report.samples} samples"

    return "no"


def __dynamic_algebra(ops: OperatorQuadruple, instance: Instance) -> list[VerifyReport]:
    return [
        __check_laws("bounds", instance, bound_laws(ops.lattice, ops), ops.points),
        __check_laws("monotone", instance, monotone_laws(ops), ops.points),
        __check_laws("dynamic pairs", instance, dynamic_pair_laws(ops), ops.points),
    ]


def __dynamic(instance: Instance) -> VerifyReport:
    """Which dynamic-algebra conditions the given operators meet, and that their starred operators form one."""
    ops = instance.quadruple
    given = __dynamic_algebra(ops, instance) + [operator_conditions(ops, instance.budget, instance.name)]
    notes = tuple((report.suite, __holds(report)) for report in given)

    induced = induce_R3(instance.lattice, ops, instance.budget, exhaustive=True)

    if induced.empty:
        starred = skipped("starred operators form a dynamic algebra", instance.name, "induced relation R3 is empty")
    elif not induced.frame().serial:
        starred = skipped("starred operators form a dynamic algebra", instance.name, "requires serial R3")
    else:
        star = starred_quadruple(instance.lattice, induced)
        starred = combine("starred operators form a dynamic algebra", instance.name, __dynamic_algebra(star, instance))

    return combine(Suite.DYNAMIC.value, instance.name, [starred], notes)


def __run(suite: Suite, instance: Instance) -> VerifyReport:
    lattice, budget = instance.lattice, instance.budget

    match suite:
        case Suite.THM1:
            return __thm1(instance)
        case Suite.THM2:
            return __thm2(instance)
        case Suite.THM3:
            return __thm3(instance)
        case Suite.PROP1:
            return __prop1(instance)
        case Suite.LEMMA1:
            return __lemma1(instance)
        case Suite.THM6:
            return __thm6(instance)
        case Suite.THM7:
            return __thm7(instance)
        case Suite.THM4_ROUNDTRIP:
            return roundtrip_frame(lattice, instance.frame, budget)
        case Suite.COR1:
            return check_star_inequalities(lattice, instance.quadruple, budget)
        case Suite.THM8:
            return check_past_future_star(lattice, instance.quadruple, budget)
        case Suite.THM9:
            return check_always_star(lattice, instance.quadruple, budget)
        case Suite.DYNAMIC:
            return __dynamic(instance)
        case Suite.EXT_PF:
            return check_extension_PF(lattice, instance.quadruple.P, instance.quadruple.F, budget)
        case Suite.EXT_HG:
            return check_extension_HG(lattice, instance.quadruple.H, instance.quadruple.G, budget)
        case Suite.DEMORGAN:
            return __demorgan(instance)
        case Suite.OML_LAW:
            return __oml_law(instance)


def run_suite(suite: Suite | str, instance: Instance) -> VerifyReport:
    suite = Suite(suite)

    try:
        __check_preconditions(suite, instance)
    except PreconditionUnmet as error:
        return skipped(suite.value, instance.name, str(error))

    logger.info("Running %s on %s", suite.value, instance.name)

    try:
        report = __run(suite, instance)
    except BudgetExceeded as error:
        logger.warning("Unable to run %s exhaustively: %s", suite.value, error)
        return skipped(suite.value, instance.name, f"budget exceeded: {error.count} > {error.budget}")

    # sub-reports carry their own titles; the top level is always the suite id on this instance
    return replace(report, suite=suite.value, instance=instance.name)


def run_suites(suites: Iterable[Suite | str], instance: Instance) -> list[VerifyReport]:
    """Runs suites in order; with several workers the suites themselves are spread across processes."""
    suites = [Suite(s) for s in suites]

    if instance.budget.workers <= 1 or len(suites) <= 1:
        return [run_suite(s, instance) for s in suites]

    serial = replace(instance, budget=replace(instance.budget, workers=1))

    with ProcessPoolExecutor(max_workers=instance.budget.workers) as executor:
        return list(executor.map(run_suite, suites, repeat(serial)))


def __first_failure(report: VerifyReport) -> VerifyReport | None:
    if report.witness is not None and report.failed:
        return report

    for detail in report.details:
        found = __first_failure(detail)

        if found is not None:
            return found

    return None


def replay_witness(report: VerifyReport) -> Trace:
    """Re-evaluates the first failing witness, listing every intermediate lattice value."""
    if not report.failed:
        raise NotAFailure(f'Report "{report.suite}" is {report.status()}, there is no witness to replay')

    failure = __first_failure(report)

    if failure is None or failure.witness.replay is None:
        raise NotAFailure(f'Report "{report.suite}" has no replayable witness')

    witness = failure.witness
    header = f"{failure.suite}: {witness.describe()}"

    return Trace((header,) + tuple(witness.replay()))
