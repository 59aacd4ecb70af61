from typing import Optional


class SignedFlowException(Exception):
    detail: str

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class ConfigurationError(SignedFlowException):
    pass


class GraphError(SignedFlowException):
    pass


class UnknownVertex(GraphError):
    pass


class UnknownEdge(GraphError):
    pass


class OrientationError(GraphError):
    pass


class ContractionError(GraphError):
    pass


class SearchLimitExceeded(SignedFlowException):
    pass


class PreconditionError(SignedFlowException):
    pass


class NotCubic(PreconditionError):
    pass


class HasLoop(PreconditionError):
    pass


class NotFlowAdmissible(PreconditionError):
    pass


class CyclicConnectivityBelow5(PreconditionError):
    pass


class ReductionError(SignedFlowException):
    pass


class LiftError(SignedFlowException):
    pass


class GeneratorError(SignedFlowException):
    pass


class FormatError(SignedFlowException):
    line: Optional[int]

    def __init__(self, detail: str, line: Optional[int] = None):
        if line is not None:
            detail = f"line {line}: {detail}"
        super().__init__(detail)
        self.line = line


class InvariantBreach(SignedFlowException):
    """
    InvariantBreach is raised when a state the theory rules out is reached.
    On inputs passing the precondition checks this means an implementation bug,
    so the exception always carries a dump of the state it was found in.
    """
    state: str

    def __init__(self, detail: str, state: str = ""):
        super().__init__(detail)
        self.state = state

    def __str__(self) -> str:
        if not self.state:
            return self.detail
        return f"{self.detail}\n{self.state}"
