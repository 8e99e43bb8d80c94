from collections.abc import Sequence
from itertools import product

import numpy as np

from .lattice import Oml, spec_of
from .sasaki import sasaki_tables
from .tense import OperatorQuadruple, Proposition
from .timeframe import TimeFrame


def format_table(header: tuple[str, Sequence[str]], rows: Sequence[tuple[str, Sequence[str]]]) -> str:
    """Aligned "label | v | v" rows with a rule under the header; trailing spaces are stripped."""
    lines = [header] + list(rows)
    widths = [max(len(label) for label, _ in lines)]
    widths += [max(len(cells[j]) for _, cells in lines) for j in range(len(header[1]))]

    def line(label: str, cells: Sequence[str]) -> str:
        columns = [label.ljust(widths[0])] + [c.ljust(w) for c, w in zip(cells, widths[1:])]
        return " | ".join(columns).rstrip()

    rule = "-+-".join("-" * w for w in widths)
    text = [line(*header), rule] + [line(label, cells) for label, cells in rows]

    return "\n".join(text)


def write_lattice(lattice: Oml) -> str:
    spec = spec_of(lattice)
    lines = [f"lattice {spec.name}", "elements " + " ".join(spec.elements)]
    lines.append("covers " + " ".join(f"{lower}<{upper}" for lower, upper in spec.covers))

    if spec.ortho:
        lines.append("ortho " + " ".join(f"{x}:{y}" for x, y in spec.ortho))

    return "\n".join(lines)


def write_frame(f: TimeFrame) -> str:
    return "\n".join(
        [
            f"frame {f.name}",
            "points " + " ".join(f.points),
            "rel " + " ".join(f"{s}>{t}" for s, t in f.named_pairs()),
        ]
    )


def write_proposition(name: str, q: Proposition, lattice: Oml, points: tuple[str, ...]) -> str:
    return f"prop {name} = " + " ".join(f"{t}:{lattice.names[x]}" for t, x in zip(points, q.values))


def write_operators(ops: OperatorQuadruple) -> str:
    """Tabulates every operator over all of L^T, so only small instances are practical."""
    lattice, points = ops.lattice, ops.points
    domain = np.array(list(product(range(lattice.n), repeat=len(points))), dtype=np.intp)
    lines = [f"operators {ops.name}", "points " + " ".join(points)]

    for symbol, operator in ops.items():
        lines.append(f"op {symbol}")

        for q, image in zip(domain, operator.evaluate(domain)):
            left = " ".join(lattice.names[x] for x in q)
            right = " ".join(lattice.names[x] for x in image)
            lines.append(f"{left} -> {right}")

    return "\n".join(lines)


def format_sasaki_tables(lattice: Oml) -> str:
    conjunction, implication = sasaki_tables(lattice)
    names = lattice.names
    sections = []

    for symbol, table in (("⊙", conjunction), ("→", implication)):
        rows = [(names[x], [names[v] for v in table[x]]) for x in range(lattice.n)]
        sections.append(format_table((f"x {symbol} y", list(names)), rows))

    return "\n\n".join(sections)
