import json
import logging
from collections.abc import Callable
from enum import Enum
from functools import wraps
from pathlib import Path
from typing import Annotated, Any

import typer

try:  # typer >= 0.26 vendors its own click
    from typer import _click as click
except ImportError:
    import click

from . import fixtures
from .config import Budget
from .demo import DEMOS, operator_table
from .demo import demo as render_demo
from .errors import OmtenseError
from .extension import extend_frame, extend_prop_HG, extend_prop_PF
from .induction import FrameInducible, classify_inducibility, induce_R1, induce_R2, induce_R3
from .lattice import LatticeSpec, Oml, build_lattice, check_orthomodular
from .read import read_frame, read_lattice, read_operators, read_propositions
from .tense import FrameInduced, OperatorQuadruple, Tense, frame_induced_quadruple
from .verify import Instance, Suite, replay_witness, run_suites
from .write import format_sasaki_tables, format_table, write_frame

app = typer.Typer(add_completion=False, no_args_is_help=True, help="Tense operators on finite orthomodular lattices.")


class Relation(str, Enum):
    R1 = "r1"
    R2 = "r2"
    R3 = "r3"


class Mode(str, Enum):
    PF = "pf"
    HG = "hg"


class Format(str, Enum):
    TEXT = "text"
    JSON_LINES = "json-lines"


LatticeOption = Annotated[str, typer.Option("--lattice", help="Lattice file or built-in name (chain2, boolean4, boolean8, mo2, fig1, o6).")]
FrameOption = Annotated[Path | None, typer.Option("--frame", help="Time frame file.")]
OpsOption = Annotated[str | None, typer.Option("--ops", help='Operators: "frame:<file>", "example2" or "table:<file>".')]
FrameSizeOption = Annotated[int, typer.Option("--frame-size", help='Number of time points for "example2" operators.')]
PropOption = Annotated[Path, typer.Option("--prop", help="Proposition file.")]


def __guard(function: Callable[..., Any]) -> Callable[..., Any]:
    """Reports library errors on stderr with exit code 2."""

    @wraps(function)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return function(*args, **kwargs)
        except OmtenseError as error:
            typer.echo(f"error: {error}", err=True)
            raise typer.Exit(2) from None

    return wrapper


def __lattice_spec(source: str) -> LatticeSpec:
    if source in fixtures.LATTICES:
        return fixtures.LATTICES[source]

    return read_lattice(source)


def __lattice(source: str) -> Oml:
    return build_lattice(__lattice_spec(source), require_orthomodular=False)


def __operators(lattice: Oml, frame: Path | None, ops: str | None, frame_size: int) -> OperatorQuadruple:
    if ops is None:
        if frame is None:
            raise OmtenseError('One of "--frame" or "--ops" is required')

        return frame_induced_quadruple(lattice, read_frame(frame))

    kind, _, argument = ops.partition(":")

    match kind:
        case "frame" if argument:
            return frame_induced_quadruple(lattice, read_frame(argument))
        case "table" if argument:
            return read_operators(argument, lattice)
        case "example2" if not argument:
            return fixtures.example2_operators(lattice, frame_size)
        case _:
            raise OmtenseError(f'"{ops}" is not an operator source, expected "frame:<file>", "example2" or "table:<file>"')


@app.callback()
def main_options(verbose: Annotated[bool, typer.Option("--verbose", help="Log progress to stderr.")] = False) -> None:
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s", force=True)


@app.command("check-lattice")
@__guard
def check_lattice(lattice: Annotated[str, typer.Argument(help="Lattice file or built-in name.")]) -> None:
    """Builds a lattice and checks its orthocomplementation and the orthomodular law."""
    spec = __lattice_spec(lattice)

    try:
        built = build_lattice(spec, require_orthomodular=False)
    except OmtenseError as error:
        typer.echo(f"fail: {error}")
        raise typer.Exit(1) from None

    if not built.is_ortho:
        typer.echo("ok: bounded lattice without orthocomplementation")
        return

    report = check_orthomodular(built)

    if report.failed:
        typer.echo(f"fail: not orthomodular: {report.witness.describe()}")
        raise typer.Exit(1)

    typer.echo("ok: orthomodular")


@app.command("eval")
@__guard
def evaluate(
    lattice: LatticeOption,
    prop: PropOption,
    frame: FrameOption = None,
    ops: OpsOption = None,
    frame_size: FrameSizeOption = 5,
) -> None:
    """Prints P, F, H and G of every proposition in a file."""
    built = __lattice(lattice)
    quadruple = __operators(built, frame, ops, frame_size)
    propositions = read_propositions(prop, built, quadruple.points)

    typer.echo("\n\n".join(operator_table(built, quadruple, name, q) for name, q in propositions.items()))


@app.command("sasaki-table")
@__guard
def sasaki_table(lattice: LatticeOption) -> None:
    """Prints the Sasaki conjunction and implication tables."""
    typer.echo(format_sasaki_tables(__lattice(lattice)))


@app.command("induce")
@__guard
def induce(
    lattice: LatticeOption,
    ops: OpsOption = None,
    frame: FrameOption = None,
    frame_size: FrameSizeOption = 5,
    relation: Annotated[Relation, typer.Option("--relation", help="Which induced relation to print.")] = Relation.R3,
    budget: Annotated[int | None, typer.Option("--budget", help="Proposition budget.")] = None,
    seed: Annotated[int | None, typer.Option("--seed")] = None,
) -> None:
    """Prints the relation induced by the given operators in the frame format, with a witness per excluded pair."""
    built = __lattice(lattice)
    quadruple = __operators(built, frame, ops, frame_size)
    limits = Budget.from_env().override(propositions=budget, seed=seed)

    match relation:
        case Relation.R1:
            induced = induce_R1(built, quadruple.P, quadruple.F, limits)
        case Relation.R2:
            induced = induce_R2(built, quadruple.H, quadruple.G, limits)
        case Relation.R3:
            induced = induce_R3(built, quadruple, limits)

    name = f"{quadruple.name}-{relation.value}"

    if induced.empty:
        lines = [f"# relation {name} is empty"]
    else:
        lines = [write_frame(induced.frame(name))]

    if not induced.exhaustive:
        lines.append(f"# upper bound from {induced.samples} sampled propositions")

    lines.extend(f"# {induced.describe_witness(s, t)}" for s, t in sorted(induced.witnesses))

    typer.echo("\n".join(lines))


@app.command("classify")
@__guard
def classify(
    lattice: LatticeOption,
    ops: OpsOption = None,
    frame: FrameOption = None,
    frame_size: FrameSizeOption = 5,
) -> None:
    """Decides whether the given operators are induced by some time frame."""
    built = __lattice(lattice)
    verdict = classify_inducibility(built, __operators(built, frame, ops, frame_size), Budget.from_env())

    if isinstance(verdict, FrameInducible):
        typer.echo("frame-induced")
        typer.echo(write_frame(verdict.frame))
        return

    typer.echo(f"not frame-induced: {verdict.reason}")

    if verdict.witness is not None:
        typer.echo(f"witness: {verdict.witness.describe()}")


@app.command("roundtrip")
@__guard
def roundtrip(lattice: LatticeOption, frame: Annotated[Path, typer.Option("--frame", help="Time frame file.")]) -> None:
    """Re-induces a frame from its own operators."""
    built = __lattice(lattice)
    report = run_suites([Suite.THM4_ROUNDTRIP], Instance(built, read_frame(frame), budget=Budget.from_env()))[0]

    typer.echo(report.to_text())

    if report.failed:
        raise typer.Exit(1)


@app.command("extend")
@__guard
def extend(
    lattice: LatticeOption,
    prop: PropOption,
    frame: FrameOption = None,
    ops: OpsOption = None,
    frame_size: FrameSizeOption = 5,
    mode: Annotated[Mode, typer.Option("--mode", help="Extend with P and F or with H and G.")] = Mode.PF,
) -> None:
    """Prints every proposition extended to the frame with past and future copies, and the extended operators on it."""
    built = __lattice(lattice)
    quadruple = __operators(built, frame, ops, frame_size)
    budget = Budget.from_env()

    if mode is Mode.PF:
        lower, upper = quadruple.P, quadruple.F
        induced = induce_R1(built, lower, upper, budget, exhaustive=True)
        extend_prop = extend_prop_PF
    else:
        lower, upper = quadruple.H, quadruple.G
        induced = induce_R2(built, lower, upper, budget, exhaustive=True)
        extend_prop = extend_prop_HG

    ef = extend_frame(induced.frame())
    symbols = mode.value.upper()
    tables = []

    for name, q in read_propositions(prop, built, quadruple.points).items():
        q_bar = extend_prop(built, q, lower, upper, ef)
        rows = [(f"{name}bar(t)", [built.names[x] for x in q_bar.values])]

        for symbol in symbols:
            image = FrameInduced(built, ef.bar, Tense[symbol])(q_bar)
            rows.append((f"{symbol}bar({name}bar)(t)", [built.names[x] for x in image.values]))

        tables.append(format_table(("t", list(ef.bar.points)), rows))

    typer.echo("\n\n".join(tables))


@app.command("verify")
@__guard
def verify(
    lattice: LatticeOption,
    suite: Annotated[list[str], typer.Option("--suite", help='Suite id, repeatable, or "all".')],
    frame: FrameOption = None,
    ops: OpsOption = None,
    frame_size: FrameSizeOption = 5,
    budget: Annotated[int | None, typer.Option("--budget", help="Proposition budget (default 10^6 or OMT_BUDGET).")] = None,
    pair_budget: Annotated[int | None, typer.Option("--pair-budget", help="Budget for quantifiers over two or more propositions.")] = None,
    seed: Annotated[int | None, typer.Option("--seed", help="Seed for sampled quantifiers.")] = None,
    workers: Annotated[int | None, typer.Option("--workers", help="Worker processes.")] = None,
    output: Annotated[Format, typer.Option("--format", help="Report format.")] = Format.TEXT,
    replay: Annotated[bool, typer.Option("--replay", help="Print the evaluation trace of every failure.")] = False,
) -> None:
    """Runs theorem suites; exits 1 when any suite fails."""
    built = __lattice(lattice)
    limits = Budget.from_env().override(budget, pair_budget, seed, workers)

    time_frame = read_frame(frame) if frame is not None else None
    operators = __operators(built, None, ops, frame_size) if ops is not None else None

    suites = list(Suite) if "all" in suite else [__suite(s) for s in suite]
    reports = run_suites(suites, Instance(built, time_frame, operators, limits))

    for report in reports:
        if output is Format.JSON_LINES:
            typer.echo(json.dumps(report.to_dict(), ensure_ascii=False))
        else:
            typer.echo(report.to_text())

            if replay and report.failed:
                typer.echo(str(replay_witness(report)))

    if any(r.failed for r in reports):
        raise typer.Exit(1)


def __suite(name: str) -> Suite:
    try:
        return Suite(name)
    except ValueError:
        raise OmtenseError(f'"{name}" is not a suite, expected one of {", ".join(s.value for s in Suite)} or all') from None


@app.command("demo")
@__guard
def demo(name: Annotated[str, typer.Argument(help=f"One of {', '.join(DEMOS)}.")]) -> None:
    """Prints a worked example."""
    typer.echo(render_demo(name))


def main(args: list[str] | None = None) -> int:
    command = typer.main.get_command(app)

    try:
        result = command.main(args=args, prog_name="omtense", standalone_mode=False)
    except click.ClickException as error:
        error.show()
        return error.exit_code
    except click.exceptions.Abort:
        return 1

    return result if isinstance(result, int) else 0
