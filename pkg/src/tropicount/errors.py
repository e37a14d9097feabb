"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Polygon or family parameters violate a constraint."""

    def __init__(self, constraint, message=None):
        self.constraint = constraint
        super().__init__(message or f"parameter constraint violated: {constraint}")


class ConsistencyError(RuntimeError):
    """An internal invariant that must hold for the supported families failed."""


class ResourceLimitError(RuntimeError):
    """A search or iteration exceeded its configured budget.

    Raised instead of returning a partial result, since truncated counts are
    meaningless for verification.
    """


class InfeasibleError(ValueError):
    """Construction constraints admit no solution for the given parameters."""


class ParseError(ValueError):
    def __init__(self, message, line=1, column=1):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")
