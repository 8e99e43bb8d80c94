import numpy as np

from .lattice import Element, Oml


def sasaki_tables(lattice: Oml) -> tuple[np.ndarray, np.ndarray]:
    return lattice.sasaki


def sasaki_and(lattice: Oml, x: Element, y: Element) -> Element:
    return int(sasaki_tables(lattice)[0][x, y])


def sasaki_imp(lattice: Oml, x: Element, y: Element) -> Element:
    return int(sasaki_tables(lattice)[1][x, y])


def sasaki_projection(lattice: Oml, y: Element, x: Element) -> Element:
    """The projection onto y applied to x, which is x ⊙ y."""
    return sasaki_and(lattice, x, y)


def conjunction(lattice: Oml, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return sasaki_tables(lattice)[0][x, y]


def implication(lattice: Oml, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return sasaki_tables(lattice)[1][x, y]
