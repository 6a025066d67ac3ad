"""Exception hierarchy shared by all modules."""


class GraphError(ValueError):
    """Invalid graph construction input."""


class VertexRangeError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class GraphFormatError(GraphError):
    """Malformed graph or coloring text. ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EdgeCountMismatch(GraphFormatError):
    pass


class ColoringError(ValueError):
    """Coloring is malformed or does not fit the graph it is paired with."""


class NotProperError(ColoringError):
    pass


class NotAcyclicError(ColoringError):
    pass


class FamilyError(ValueError):
    """Unknown family, bad parameters, or a value outside a formula's range."""


class BudgetExceeded(RuntimeError):
    """A search ran past its configured node/path/partition budget.

    Never interpreted as a negative answer.
    """

    def __init__(self, what, limit):
        self.what = what
        self.limit = limit
        super().__init__(f"{what} budget of {limit} exceeded")
