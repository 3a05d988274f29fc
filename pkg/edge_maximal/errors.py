"""
Exceptions raised by the ``edge_maximal`` package.

Every domain error derives from :class:`HypergraphError`, which is itself a
``ValueError`` so callers that only care about "bad input" can catch that.
"""


class HypergraphError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidEdgeError(HypergraphError):
    """An edge is malformed, out of range, duplicated or missing."""


class ParseError(HypergraphError):
    """
    Raised when a hypergraph or tree text document cannot be parsed.

    :param message: Description of the problem.
    :type message: str
    :param line: 1-based line number where the problem was found (0 if unknown).
    :type line: int
    """

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class GuardError(HypergraphError):
    """A size guard or a parameter precondition was violated."""


class BinomialOverflowError(GuardError, OverflowError):
    """A value does not fit in the bounded integer width an operation needs."""


class ConstructionError(HypergraphError):
    """A construction precondition does not hold."""


class SearchLimitExceeded(GuardError):
    """An exhaustive search hit its resource limit; partial results are discarded."""
