import os
from dataclasses import dataclass, replace

from .errors import OmtenseError

BUDGET_VARIABLE = "OMT_BUDGET"


@dataclass(frozen=True)
class Budget:
    propositions: int = 10**6  # single-proposition quantifiers
    pairs: int = 10**6  # quantifiers over two or more propositions
    seed: int = 0
    workers: int = 1

    @staticmethod
    def from_env() -> "Budget":
        value = os.environ.get(BUDGET_VARIABLE)

        if value is None or value == "":
            return Budget()

        try:
            propositions = int(value)
        except ValueError:
            propositions = 0

        if propositions <= 0:
            raise OmtenseError(f'{BUDGET_VARIABLE} "{value}" is not a positive integer')

        return Budget(propositions=propositions)

    def limit(self, arity: int) -> int:
        return self.propositions if arity <= 1 else self.pairs

    def override(
        self,
        propositions: int | None = None,
        pairs: int | None = None,
        seed: int | None = None,
        workers: int | None = None,
    ) -> "Budget":
        budget = self

        if propositions is not None:
            budget = replace(budget, propositions=propositions)

        if pairs is not None:
            budget = replace(budget, pairs=pairs)

        if seed is not None:
            budget = replace(budget, seed=seed)

        if workers is not None:
            budget = replace(budget, workers=workers)

        for name, value in (("budget", budget.propositions), ("pair budget", budget.pairs), ("workers", budget.workers)):
            if value <= 0:
                raise OmtenseError(f'{name} "{value}" is not a positive integer')

        return budget
