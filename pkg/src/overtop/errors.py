from typing import Optional, Sequence, Any


class OvertopError(Exception):
    pass


class DomainError(OvertopError, ValueError):
    pass


class ParseError(DomainError):
    def __init__(self, msg: str, line: int = 1, column: int = 1):
        super().__init__("{} (line {}, column {})".format(msg, line, column))
        self.line = line
        self.column = column


class ZeroDenominatorError(ParseError):
    pass


class DegreeMismatchError(DomainError):
    pass


class EndpointRootError(DomainError):
    def __init__(self, msg: str, point: Any = None):
        super().__init__(msg)
        self.point = point


class NoSignChangeError(DomainError):
    pass


class ComputationError(OvertopError, ArithmeticError):
    pass


class NoCommonRootError(ComputationError):
    pass


class AmbiguousRootError(ComputationError):
    def __init__(self, msg: str, candidates: Optional[Sequence[Any]] = None):
        super().__init__(msg)
        self.candidates = list(candidates or [])


class SelectionError(ComputationError):
    pass


class SingularParametrizationError(ComputationError):
    pass


class InfeasibleError(ComputationError):
    pass


class ResolventError(ComputationError):
    pass


class ConvergenceError(ComputationError):
    def __init__(self, msg: str, trace: Optional[Sequence[Any]] = None):
        super().__init__(msg)
        self.trace = list(trace or [])


class BranchError(ComputationError):
    pass
