import logging
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from itertools import repeat
from typing import TypeVar

import numpy as np

from .errors import BudgetExceeded
from .lattice import Oml

logger = logging.getLogger(__name__)

Result = TypeVar("Result")

CHUNK_CELLS = 1 << 18  # lattice values materialised per chunk
INDEX_LIMIT = 1 << 62  # largest assignment count addressed by index


@dataclass(frozen=True, eq=False)
class Domain:
    """All assignments of `arity` propositions over `size` time points, i.e. (L^T)^arity."""

    lattice: Oml
    size: int
    arity: int = 1

    @property
    def width(self) -> int:
        return self.size * self.arity

    @property
    def propositions(self) -> int:
        return self.lattice.n**self.size

    @property
    def count(self) -> int:
        return self.lattice.n**self.width

    @cached_property
    def alphabet(self) -> np.ndarray:
        # odometer digit 0 is the bottom element so the first assignment is constant-bottom
        others = [x for x in range(self.lattice.n) if x != self.lattice.bottom]
        return np.array([self.lattice.bottom] + others, dtype=np.intp)

    def split(self, values: np.ndarray) -> tuple[np.ndarray, ...]:
        return tuple(values[:, k * self.size : (k + 1) * self.size] for k in range(self.arity))

    def decode(self, indices: np.ndarray) -> tuple[np.ndarray, ...]:
        if self.width == 0:
            return ()

        digits = np.stack(np.unravel_index(indices, (self.lattice.n,) * self.width), axis=1)

        return self.split(self.alphabet[digits])


@dataclass(frozen=True)
class Chunk:
    start: int  # ordinal of the first assignment
    stop: int

    def __len__(self) -> int:
        return self.stop - self.start


@dataclass(frozen=True, eq=False)
class Plan:
    domain: Domain
    exhaustive: bool
    total: int  # number of assignments visited
    seed: int = 0

    @property
    def samples(self) -> int | None:
        return None if self.exhaustive else self.total

    def chunks(self) -> list[Chunk]:
        rows = max(1, CHUNK_CELLS // max(self.domain.width, 1))

        return [Chunk(start, min(start + rows, self.total)) for start in range(0, self.total, rows)]

    def assignments(self, chunk: Chunk) -> tuple[np.ndarray, ...]:
        if self.exhaustive:
            return self.domain.decode(np.arange(chunk.start, chunk.stop, dtype=np.int64))

        rng = np.random.default_rng([self.seed, chunk.start])

        if self.domain.count >= INDEX_LIMIT:
            digits = rng.integers(0, self.domain.lattice.n, size=(len(chunk), self.domain.width))
            return self.domain.split(self.domain.alphabet[digits])

        # one uniform draw per stratum of the index space
        step = self.domain.count / self.total
        ordinals = np.arange(chunk.start, chunk.stop, dtype=np.float64)
        low = np.floor(ordinals * step).astype(np.int64)
        high = np.minimum(np.maximum(np.floor((ordinals + 1) * step).astype(np.int64), low + 1), self.domain.count)
        low = np.minimum(low, high - 1)

        return self.domain.decode(rng.integers(low, high))

    def assignment(self, ordinal: int) -> tuple[np.ndarray, ...]:
        """The single assignment at `ordinal`, reproduced exactly as its chunk produced it."""
        for chunk in self.chunks():
            if chunk.start <= ordinal < chunk.stop:
                return tuple(batch[ordinal - chunk.start] for batch in self.assignments(chunk))

        raise IndexError(f"Ordinal {ordinal} is outside the plan")


def plan(domain: Domain, limit: int, seed: int = 0, exhaustive: bool = False) -> Plan:
    count = domain.count

    if count <= limit:
        return Plan(domain, True, count, seed)

    if exhaustive:
        raise BudgetExceeded(f"Enumeration of {count} assignments exceeds the budget of {limit}", count, limit)

    logger.info("Sampling %d of %d assignments", limit, count)

    return Plan(domain, False, limit, seed)


def scan(function: Callable[[Plan, Chunk], Result], plan: Plan, workers: int = 1) -> list[Result]:
    """Applies a picklable chunk function to every chunk; results are returned in chunk order."""
    chunks = plan.chunks()

    if workers <= 1 or len(chunks) <= 1:
        return [function(plan, c) for c in chunks]

    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(function, repeat(plan), chunks))
