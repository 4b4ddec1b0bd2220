class NodeKaylesError(Exception):
    """Base class for errors raised by this package."""


class GraphParseError(NodeKaylesError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CapExceededError(NodeKaylesError):
    """An exponential routine was asked to run on a graph above its size cap."""

    def __init__(self, what, n, cap):
        super().__init__(f"{what}: graph has {n} vertices, cap is {cap}")
        self.n = n
        self.cap = cap


class ContractError(NodeKaylesError, ValueError):
    """A precondition on the arguments does not hold."""


class FamilySpecError(NodeKaylesError, ValueError):
    pass
