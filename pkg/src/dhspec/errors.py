"""Exception hierarchy shared by all dhspec modules."""


class DhspecError(Exception):
    """Base class for every error raised by this package."""


# hypergraph validation

class ValidationError(DhspecError):
    pass


class DuplicateVertexSet(ValidationError):
    """Two edges cover the same vertex set."""


class EmptyTailOrHead(ValidationError):
    """An edge has an empty tail or head, or the two blocks overlap."""


class VertexOutOfRange(ValidationError):
    """An edge references a vertex id outside [1, n]."""


class NoEdges(DhspecError):
    """The operation needs at least one edge."""


class UndirectedCollision(DhspecError):
    """Two directed edges map to the same undirected edge."""


class ParseError(DhspecError):
    """Malformed input file; carries a line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


# hypermatrix algebra

class DimensionMismatch(DhspecError):
    pass


class NonpositiveDiagonal(DhspecError):
    pass


class DimensionTooLargeForExhaustiveSearch(DhspecError):
    """The subset search for a reducibility witness is capped."""


# tensor builders

class BadArity(DhspecError):
    """Normalizer arguments violate 1 <= k < s <= m."""


class NotUniform(DhspecError):
    pass


# spectra

class ZeroVector(DhspecError):
    pass


class NegativeEntry(DhspecError):
    pass


class NoConvergence(DhspecError):
    """Iteration bracket failed to narrow within the iteration budget."""


class NotSymmetric(DhspecError):
    pass


class OddOrder(DhspecError):
    pass


class BadSupportSize(DhspecError):
    pass


class RankTooSmall(DhspecError):
    pass


class NoCommonVertex(DhspecError):
    pass


class NotAPartition(DhspecError):
    pass


class TooFewVertices(DhspecError):
    pass


class NotHPlus(DhspecError):
    """Eigenvector has a negative component."""
