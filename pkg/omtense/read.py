from collections.abc import Iterator
from pathlib import Path

from .errors import EmptyRelation, MalformedSpec, OmtenseError, ParseError, UnknownElement, UnknownTimePoint
from .lattice import Element, LatticeSpec, Oml
from .tense import OperatorQuadruple, Proposition, Tabulated
from .timeframe import TimeFrame, frame


def __lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split("#", 1)[0].split()

        if tokens:
            yield number, tokens


def __split(source: str, number: int, token: str, separator: str) -> tuple[str, str]:
    left, found, right = token.partition(separator)

    if not found or not left or not right or separator in right:
        raise ParseError(source, number, token, f'expected "a{separator}b"')

    return left, right


def __header(source: str, lines: list[tuple[int, list[str]]], keyword: str) -> str:
    if not lines or lines[0][1][0] != keyword:
        number, token = (lines[0][0], lines[0][1][0]) if lines else (0, "")
        raise ParseError(source, number, token, f'expected "{keyword} <name>"')

    number, tokens = lines[0]

    if len(tokens) != 2:
        raise ParseError(source, number, " ".join(tokens), f'expected "{keyword} <name>"')

    return tokens[1]


def parse_lattice(text: str, source: str = "<string>") -> LatticeSpec:
    """Reads "lattice", "elements", "covers a<b ..." and optional "ortho a:a' ..." lines."""
    lines = list(__lines(text))
    name = __header(source, lines, "lattice")

    elements: list[str] = []
    covers: list[tuple[str, str]] = []
    ortho: list[tuple[str, str]] = []

    for number, (keyword, *tokens) in lines[1:]:
        match keyword:
            case "elements":
                elements.extend(tokens)
            case "covers":
                covers.extend(__split(source, number, t, "<") for t in tokens)
            case "ortho":
                ortho.extend(__split(source, number, t, ":") for t in tokens)
            case _:
                raise ParseError(source, number, keyword, "unknown keyword")

    for number, (keyword, *tokens) in lines[1:]:
        if keyword == "elements":
            continue

        for token in tokens:
            for element in token.replace("<", " ").replace(":", " ").split():
                if element not in elements:
                    raise ParseError(source, number, element, "undeclared element")

    return LatticeSpec(name, tuple(elements), tuple(covers), tuple(ortho))


def parse_frame(text: str, source: str = "<string>") -> TimeFrame:
    """Reads "frame", "points" and "rel s>t ..." lines, where s>t means s R t."""
    lines = list(__lines(text))
    name = __header(source, lines, "frame")

    points: list[str] = []
    pairs: list[tuple[str, str]] = []

    for number, (keyword, *tokens) in lines[1:]:
        match keyword:
            case "points":
                points.extend(tokens)
            case "rel":
                for token in tokens:
                    s, t = __split(source, number, token, ">")

                    for point in (s, t):
                        if point not in points:
                            raise ParseError(source, number, point, "undeclared time point")

                    pairs.append((s, t))
            case _:
                raise ParseError(source, number, keyword, "unknown keyword")

    try:
        return frame(name, points, pairs)
    except (EmptyRelation, MalformedSpec, UnknownTimePoint) as error:
        raise ParseError(source, lines[0][0], name, str(error)) from None


def parse_propositions(text: str, lattice: Oml, points: tuple[str, ...], source: str = "<string>") -> dict[str, Proposition]:
    """Reads "prop <name> = t:e ..." lines covering every time point exactly once."""
    propositions: dict[str, Proposition] = {}

    for number, tokens in __lines(text):
        if tokens[0] != "prop":
            raise ParseError(source, number, tokens[0], "unknown keyword")

        if len(tokens) < 3 or tokens[2] != "=":
            raise ParseError(source, number, " ".join(tokens), 'expected "prop <name> = t:e ..."')

        name = tokens[1]
        values: dict[str, Element] = {}

        for token in tokens[3:]:
            point, element = __split(source, number, token, ":")

            if point not in points:
                raise ParseError(source, number, point, "undeclared time point")

            if point in values:
                raise ParseError(source, number, point, "duplicate time point")

            try:
                values[point] = lattice.index(element)
            except UnknownElement:
                raise ParseError(source, number, element, "undeclared element") from None

        if len(values) != len(points):
            raise ParseError(source, number, name, "proposition does not cover every time point")

        propositions[name] = Proposition(tuple(values[p] for p in points))

    return propositions


def parse_operators(text: str, lattice: Oml, source: str = "<string>") -> OperatorQuadruple:
    """Reads an "operators" table: a "points" line then "op X" sections of "e ... -> e ..." rows."""
    lines = list(__lines(text))
    name = __header(source, lines, "operators")

    points: list[str] = []
    tables: dict[str, dict[tuple[Element, ...], tuple[Element, ...]]] = {}
    current: str | None = None

    def elements(number: int, tokens: list[str]) -> tuple[Element, ...]:
        if len(tokens) != len(points):
            raise ParseError(source, number, " ".join(tokens), f"expected {len(points)} elements")

        values = []

        for token in tokens:
            try:
                values.append(lattice.index(token))
            except UnknownElement:
                raise ParseError(source, number, token, "undeclared element") from None

        return tuple(values)

    for number, tokens in lines[1:]:
        match tokens[0]:
            case "points":
                points.extend(tokens[1:])
            case "op":
                if len(tokens) != 2 or tokens[1] not in ("P", "F", "H", "G"):
                    raise ParseError(source, number, " ".join(tokens), 'expected "op P|F|H|G"')

                current = tokens[1]
                tables[current] = {}
            case _ if "->" in tokens:
                if current is None:
                    raise ParseError(source, number, tokens[0], 'row before "op"')

                arrow = tokens.index("->")
                tables[current][elements(number, tokens[:arrow])] = elements(number, tokens[arrow + 1 :])
            case _:
                raise ParseError(source, number, tokens[0], "unknown keyword")

    for symbol in ("P", "F", "H", "G"):
        if symbol not in tables:
            raise ParseError(source, lines[0][0], name, f"missing operator {symbol}")

    operators = {s: Tabulated(lattice, tuple(points), t) for s, t in tables.items()}

    return OperatorQuadruple(operators["P"], operators["F"], operators["H"], operators["G"], name)


def __read_text(path: Path | str) -> tuple[str, str]:
    path = Path(path)

    if not path.exists():
        raise OmtenseError(f'"{path}" does not exist')

    if not path.is_file():
        raise OmtenseError(f'"{path}" is not a file')

    return path.read_text(encoding="utf-8"), str(path)


def read_lattice(path: Path | str) -> LatticeSpec:
    text, source = __read_text(path)
    return parse_lattice(text, source)


def read_frame(path: Path | str) -> TimeFrame:
    text, source = __read_text(path)
    return parse_frame(text, source)


def read_propositions(path: Path | str, lattice: Oml, points: tuple[str, ...]) -> dict[str, Proposition]:
    text, source = __read_text(path)
    return parse_propositions(text, lattice, points, source)


def read_operators(path: Path | str, lattice: Oml) -> OperatorQuadruple:
    text, source = __read_text(path)
    return parse_operators(text, lattice, source)
