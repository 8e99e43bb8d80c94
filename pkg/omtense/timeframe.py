from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import EmptyRelation, EmptyRestriction, MalformedSpec, UnknownTimePoint


@dataclass(frozen=True)
class TimeFrame:
    points: tuple[str, ...]
    pairs: frozenset[tuple[int, int]]  # (s, t) means s R t, "s before t"
    name: str = field(default="frame", compare=False)

    def __post_init__(self) -> None:
        if not self.points:
            raise EmptyRelation(f'Time frame "{self.name}" has no time points')

        if len(set(self.points)) != len(self.points):
            raise MalformedSpec(f'Time frame "{self.name}" declares a time point twice')

        if not self.pairs:
            raise EmptyRelation(f'Time frame "{self.name}" has an empty relation')

        for s, t in self.pairs:
            if not (0 <= s < len(self.points) and 0 <= t < len(self.points)):
                raise UnknownTimePoint(f'Pair ({s}, {t}) is out of range for time frame "{self.name}"')

    @property
    def size(self) -> int:
        return len(self.points)

    @cached_property
    def matrix(self) -> np.ndarray:
        matrix = np.zeros((self.size, self.size), dtype=bool)

        for s, t in self.pairs:
            matrix[s, t] = True

        matrix.setflags(write=False)

        return matrix

    @cached_property
    def serial(self) -> bool:
        return bool(self.matrix.any(axis=0).all() and self.matrix.any(axis=1).all())

    @cached_property
    def reflexive(self) -> bool:
        return bool(self.matrix.diagonal().all())

    @cached_property
    def transitive(self) -> bool:
        relation = self.matrix.astype(np.int32)
        composed = (relation @ relation) > 0

        return not bool((composed & ~self.matrix).any())

    def index(self, point: str) -> int:
        try:
            return self.points.index(point)
        except ValueError:
            raise UnknownTimePoint(f'"{point}" is not a time point of frame "{self.name}"') from None

    def predecessors(self, s: int) -> np.ndarray:
        return np.flatnonzero(self.matrix[:, s])

    def successors(self, s: int) -> np.ndarray:
        return np.flatnonzero(self.matrix[s, :])

    def named_pairs(self) -> list[tuple[str, str]]:
        return [(self.points[s], self.points[t]) for s, t in sorted(self.pairs)]


def frame(name: str, points: Iterable[str], pairs: Iterable[tuple[str, str]]) -> TimeFrame:
    points = tuple(points)
    index = {p: i for i, p in enumerate(points)}

    try:
        indexed = frozenset((index[s], index[t]) for s, t in pairs)
    except KeyError as error:
        raise UnknownTimePoint(f'"{error.args[0]}" is not a time point of frame "{name}"') from None

    return TimeFrame(points, indexed, name)


def frame_from_matrix(name: str, points: Iterable[str], matrix: np.ndarray) -> TimeFrame:
    return TimeFrame(tuple(points), frozenset((int(s), int(t)) for s, t in np.argwhere(matrix)), name)


def is_serial(f: TimeFrame) -> bool:
    return f.serial


def is_reflexive(f: TimeFrame) -> bool:
    return f.reflexive


def is_transitive(f: TimeFrame) -> bool:
    return f.transitive


def restrict(f: TimeFrame, subset: Iterable[str]) -> TimeFrame:
    subset = set(subset)

    for point in subset:
        f.index(point)

    kept = [i for i, p in enumerate(f.points) if p in subset]

    if not kept:
        raise EmptyRestriction(f'Restriction of time frame "{f.name}" to no time points')

    new_index = {old: new for new, old in enumerate(kept)}
    pairs = frozenset((new_index[s], new_index[t]) for s, t in f.pairs if s in new_index and t in new_index)

    if not pairs:
        raise EmptyRestriction(f'Restriction of time frame "{f.name}" has an empty relation')

    return TimeFrame(tuple(f.points[i] for i in kept), pairs, f.name)
