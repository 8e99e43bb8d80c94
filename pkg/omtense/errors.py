class OmtenseError(ValueError):
    pass


class MalformedSpec(OmtenseError):
    pass


class CycleInCovers(OmtenseError):
    def __init__(self, message: str, cycle: list[tuple[str, str]]) -> None:
        super().__init__(message)
        self.cycle = cycle


class NotALattice(OmtenseError):
    def __init__(self, message: str, pair: tuple[str, str]) -> None:
        super().__init__(message)
        self.pair = pair


class NotBounded(OmtenseError):
    pass


class OrthoViolation(OmtenseError):
    def __init__(self, message: str, witness: tuple[str, ...] = ()) -> None:
        super().__init__(message)
        self.witness = witness


class NotOrthomodular(OrthoViolation):
    pass


class NoOrtho(OmtenseError):
    pass


class UnknownElement(OmtenseError):
    pass


class UnknownTimePoint(OmtenseError):
    pass


class EmptyRelation(OmtenseError):
    pass


class EmptyRestriction(EmptyRelation):
    pass


class TabulatedMiss(OmtenseError):
    pass


class BudgetExceeded(OmtenseError):
    def __init__(self, message: str, count: int, budget: int) -> None:
        super().__init__(message)
        self.count = count
        self.budget = budget


class NameCollision(OmtenseError):
    pass


class NotAFailure(OmtenseError):
    pass


class PreconditionUnmet(OmtenseError):
    pass


class UnknownDemo(OmtenseError):
    pass


class ParseError(OmtenseError):
    def __init__(self, source: str, line: int, token: str, reason: str) -> None:
        super().__init__(f'{source}:{line}: {reason} "{token}"')
        self.source = source
        self.line = line
        self.token = token
