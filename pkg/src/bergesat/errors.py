"""Exception types shared across the package.

Every error raised on bad input derives from BergesatError, so callers
(and the CLI) can distinguish usage problems from genuine bugs.
"""


class BergesatError(Exception):
    """Base class for all package errors."""


class InvalidHypergraphError(BergesatError):
    """A vertex/edge description does not define a valid k-uniform hypergraph."""


class EdgeWrongSizeError(InvalidHypergraphError):
    """An edge does not have exactly k distinct vertices."""


class VertexOutOfRangeError(InvalidHypergraphError):
    """An edge mentions a vertex id outside range(n)."""


class DuplicateEdgeError(InvalidHypergraphError):
    """The same vertex set appears twice in the edge list."""


class TooLargeError(BergesatError):
    """Input exceeds a hard guard of an exhaustive routine."""


class UnsupportedUniformityError(BergesatError):
    """No construction or formula is available for this uniformity."""


class OrderTooSmallError(BergesatError):
    """The requested path length m is below the supported range."""


class TooFewVerticesError(BergesatError):
    """n is too small to host the requested construction."""


class ParameterRegimeError(BergesatError):
    """Parameters fall outside the regime where the formula or build is valid."""


class UnderspecifiedConstructionError(BergesatError):
    """The construction rule for this parameter combination is not defined."""


class FormatError(BergesatError):
    """A hypergraph or pattern file violates the interchange format."""


class SaturationTimeout(BergesatError):
    """A saturation scan exceeded its deadline.

    Attributes
    ----------
    ranks_done : int
        Number of k-set ranks fully processed before the deadline hit.
        Diagnostic only; the value depends on scheduling.
    """

    def __init__(self, message: str, ranks_done: int = 0):
        super().__init__(message)
        self.ranks_done = ranks_done
