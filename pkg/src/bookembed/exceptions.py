"""
Exceptions module.

This module defines the exceptions raised (or returned) by `bookembed`.
Every exception carries a `code`, which is the exit code used by the command line
when the exception reaches it:

- `1`: the input is valid but the requested construction does not apply or is infeasible;
- `2`: the input itself is invalid;
- `3`: a step that the theory guarantees has failed, which is always a bug.

Some operations return an exception instance instead of raising it (for example
[`planar_embed`][bookembed.planarity.planar_embed] returns a `NonPlanar` marker).
Such instances are falsy, so the result can be tested with `if not result`.
"""

from typing import Optional, Sequence

from bookembed.types import Edge

EXIT_INFEASIBLE = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3


class BookEmbedException(Exception):  # noqa: N818
    """The base exception of the package."""

    code = EXIT_INPUT_ERROR

    def __init__(self, message: str = "", code: Optional[int] = None) -> None:
        """
        Initialize the exception.

        Arguments:
            message: The error message.
            code: Override the class exit code.
        """
        super().__init__(message)
        if code is not None:
            self.code = code
        self.message = message

    def __str__(self):
        return self.message


class Marker(BookEmbedException):
    """An outcome that is returned rather than raised. Always falsy."""

    code = EXIT_INFEASIBLE

    def __bool__(self):
        return False


class GraphError(BookEmbedException):
    """The given vertices and edges do not form a simple graph."""

    def __init__(self, message: str, edge: Edge) -> None:
        """
        Initialize the exception.

        Arguments:
            message: The error message.
            edge: The offending edge.
        """
        super().__init__(message)
        self.edge = edge


class LoopEdge(GraphError):
    """An edge joins a vertex to itself."""

    def __init__(self, edge: Edge) -> None:
        """
        Initialize the exception.

        Arguments:
            edge: The offending edge.
        """
        super().__init__(f"Loop edge {edge[0]}-{edge[1]}", edge)


class DuplicateEdge(GraphError):
    """An unordered pair of vertices appears twice."""

    def __init__(self, edge: Edge) -> None:
        """
        Initialize the exception.

        Arguments:
            edge: The offending edge.
        """
        super().__init__(f"Duplicate edge {edge[0]}-{edge[1]}", edge)


class VertexOutOfRange(GraphError):
    """An edge endpoint is not a vertex of the graph."""

    def __init__(self, edge: Edge) -> None:
        """
        Initialize the exception.

        Arguments:
            edge: The offending edge.
        """
        super().__init__(f"Edge {edge[0]}-{edge[1]} has an endpoint outside the vertex set", edge)


class ParseError(BookEmbedException):
    """A text input could not be parsed."""

    def __init__(self, message: str, line: int = 0) -> None:
        """
        Initialize the exception.

        Arguments:
            message: The error message.
            line: The line number (starting at 1), or 0 when not applicable.
        """
        if line:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InconsistentRotation(BookEmbedException):
    """A rotation system does not match the edges of its graph."""


class NotPlaneEmbedding(BookEmbedException):
    """A rotation system does not describe an embedding in the plane."""


class NonPlanar(Marker):
    """The graph is not planar (returned by `planar_embed`)."""

    def __init__(self, message: str = "The graph is not planar") -> None:
        """
        Initialize the marker.

        Arguments:
            message: The message.
        """
        super().__init__(message)


class NotPlanar(BookEmbedException):
    """The graph is not planar, so the requested construction does not apply."""

    code = EXIT_INFEASIBLE


class TooSmall(BookEmbedException):
    """The graph has too few vertices for the requested test."""


class TooLarge(BookEmbedException):
    """The graph has too many vertices for an exhaustive computation."""


class NotTwoConnected(BookEmbedException):
    """The graph is not 2-connected."""


class PreconditionViolated(BookEmbedException):
    """A documented precondition does not hold."""


class NotNicelyPlanar(BookEmbedException):
    """A block of the graph has a separating triangle."""

    code = EXIT_INFEASIBLE

    def __init__(self, triangle: Sequence[int]) -> None:
        """
        Initialize the exception.

        Arguments:
            triangle: A separating triangle.
        """
        self.triangle = tuple(triangle)
        vertices = ", ".join(str(vertex) for vertex in self.triangle)
        super().__init__(
            f"The graph is not nicely planar: triangle ({vertices}) is separating. "
            "Use the homeomorphic mode (homeomorphic_two_page, or --homeomorphic) instead.",
        )


class NotFound(Marker):
    """The exhaustive search found no Hamiltonian cycle."""

    def __init__(self, message: str = "The graph has no Hamiltonian cycle") -> None:
        """
        Initialize the marker.

        Arguments:
            message: The message.
        """
        super().__init__(message)


class BudgetExceeded(BookEmbedException):
    """A search exceeded its node budget before reaching a conclusion."""

    code = EXIT_INFEASIBLE

    def __init__(self, budget: int) -> None:
        """
        Initialize the exception.

        Arguments:
            budget: The exhausted node budget.
        """
        super().__init__(f"Search budget of {budget} nodes exceeded")
        self.budget = budget


class Infeasible(Marker):
    """No page assignment exists with the given number of pages."""

    def __init__(self, pages: int) -> None:
        """
        Initialize the marker.

        Arguments:
            pages: The page budget that was too small.
        """
        super().__init__(f"No assignment on {pages} page(s) exists for this spine order")
        self.pages = pages


class TraceMismatch(BookEmbedException):
    """An augmentation trace does not match the graph or cycle it is applied to."""


class NotSubhamiltonianOrder(BookEmbedException):
    """The spine order does not give a two-page layout of the graph."""

    code = EXIT_INFEASIBLE


class CoverageError(BookEmbedException):
    """A layout misses (or has extra) vertices or edges of its graph."""


class InvalidLayout(BookEmbedException):
    """A layout has crossing edges on a same page."""


class InvalidBlockLayout(BookEmbedException):
    """The layout given for a block is not valid."""

    def __init__(self, block: int, reason: str) -> None:
        """
        Initialize the exception.

        Arguments:
            block: The index of the failing block.
            reason: Why the layout is invalid.
        """
        super().__init__(f"Invalid layout for block {block}: {reason}")
        self.block = block


class InternalGuaranteeViolated(BookEmbedException):
    """A step guaranteed by the theory has failed. This is a bug."""

    code = EXIT_INTERNAL_ERROR
