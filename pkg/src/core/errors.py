"""Domain errors raised by the polarity library.

Every error derives from ``ValueError`` so callers that only care about
"bad input" can keep catching that.
"""


class PolarityError(ValueError):
    """Base class for all library errors."""


class GraphFormatError(PolarityError):
    """Edge-list input that does not describe a simple graph."""


class ParseError(GraphFormatError):
    """Malformed edge-list line or non-integer token."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class SelfLoopError(GraphFormatError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"Self-loop at vertex {vertex}")


class DuplicateEdgeError(GraphFormatError):
    def __init__(self, u: int, v: int):
        self.edge = (min(u, v), max(u, v))
        super().__init__(f"Duplicate edge {self.edge[0]} {self.edge[1]}")


class VertexOutOfRangeError(GraphFormatError):
    def __init__(self, vertex: int, vertex_count: int):
        self.vertex = vertex
        self.vertex_count = vertex_count
        super().__init__(
            f"Vertex {vertex} out of range for a graph with {vertex_count} vertices"
        )


class EmptyGraphError(PolarityError):
    """Operation needs at least one vertex."""


class NotConnectedError(PolarityError):
    """Operation is only defined on connected graphs."""


class NotCactusError(PolarityError):
    """Some edge lies on more than one cycle."""


class NotApplicableError(PolarityError):
    """A specialized formula was called outside its hypothesis."""


class TooLargeError(PolarityError):
    def __init__(self, vertex_count: int, limit: int):
        self.vertex_count = vertex_count
        self.limit = limit
        super().__init__(
            f"Graph has {vertex_count} vertices; exhaustive counting is limited to {limit}"
        )


class InvalidSpecError(PolarityError):
    """Family description outside the domain of the chain constructions."""


class InvalidParamsError(PolarityError):
    """Random-generator or verification parameters out of range."""


class OracleInconsistencyError(PolarityError):
    """Internal traversal invariant violated (indicates a bug, not bad input)."""
