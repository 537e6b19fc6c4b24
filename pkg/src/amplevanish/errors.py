"""Exceptions shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain of the requested operation."""


class HypothesisError(DomainError):
    """A theorem's positivity or twist hypothesis was declared false."""


class TraceClosureError(Exception):
    """An induction trace contains an obligation that no justification covers.

    The offending trace is attached so callers can report it.
    """

    def __init__(self, message: str, trace=None, obligation=None):
        super().__init__(message)
        self.trace = trace
        self.obligation = obligation
