"""Custom exceptions for the cospec library.

This module provides the exception hierarchy for cospec, allowing users to
catch specific errors or broad categories of errors.

Exception Hierarchy:
    CospecException (base)
    ├── GraphError
    │   ├── VertexRangeError
    │   ├── LoopEdgeError
    │   └── InvalidParameterError
    ├── SizeLimitError
    │   ├── GraphSizeError
    │   ├── SachsLimitError
    │   └── EnumerationLimitError
    ├── PolynomialError
    │   └── ZeroPolynomialError
    ├── CharpolyError
    │   └── InexactDivisionError
    ├── SearchError
    │   └── DecompositionError
    ├── SerializationError
    │   ├── Graph6ParseError
    │   └── ExpressionParseError
    └── ConfigurationError

Usage:
    >>> from cospec import make_graph
    >>> from cospec.exceptions import LoopEdgeError, GraphError
    >>>
    >>> try:
    ...     make_graph(3, [(1, 1)])
    ... except LoopEdgeError as e:
    ...     print(f"Bad edge: {e}")
    ... except GraphError as e:
    ...     print(f"Graph error: {e}")
"""

from typing import Any, Optional


class CospecException(Exception):
    """Base exception for all cospec errors.

    All custom exceptions in cospec inherit from this class, allowing users
    to catch all library-specific errors with a single except clause.

    Attributes:
        message: Human-readable error message
    """

    def __init__(self, message: str):
        """Initialize exception with message.

        Args:
            message: Error message describing what went wrong
        """
        self.message = message
        super().__init__(self.message)

    def __repr__(self) -> str:
        """Return detailed representation of the exception."""
        return f"{self.__class__.__name__}('{self.message}')"


class GraphError(CospecException):
    """Base exception for malformed graphs and constructor arguments."""
    pass


class VertexRangeError(GraphError):
    """Raised when an edge endpoint or vertex id lies outside ``0..n-1``.

    Attributes:
        vertex: The offending vertex id
        n: Vertex count of the graph being built or queried

    Examples:
        >>> from cospec import make_graph
        >>> make_graph(2, [(0, 2)])  # Raises VertexRangeError
    """

    def __init__(self, vertex: int, n: int):
        """Initialize vertex range error.

        Args:
            vertex: The offending vertex id
            n: Vertex count of the graph
        """
        message = f"Vertex {vertex} out of range for a graph on {n} vertices"
        super().__init__(message)
        self.vertex = vertex
        self.n = n


class LoopEdgeError(GraphError):
    """Raised when an edge joins a vertex to itself.

    Attributes:
        vertex: The vertex carrying the loop
    """

    def __init__(self, vertex: int):
        """Initialize loop edge error.

        Args:
            vertex: The vertex carrying the loop
        """
        super().__init__(f"Loop edge ({vertex}, {vertex}) is not allowed in a simple graph")
        self.vertex = vertex


class InvalidParameterError(GraphError):
    """Raised when a family parameter violates its constraint.

    Attributes:
        name: Parameter name
        value: The rejected value
        constraint: Constraint that was violated (e.g. 'must be >= 3')

    Examples:
        >>> from cospec import gen_basic
        >>> gen_basic('cycle', 2)  # Raises InvalidParameterError
    """

    def __init__(self, name: str, value: Any, constraint: str):
        """Initialize invalid parameter error.

        Args:
            name: Parameter name
            value: The rejected value
            constraint: Constraint that was violated
        """
        super().__init__(f"Invalid value {value!r} for '{name}': {constraint}")
        self.name = name
        self.value = value
        self.constraint = constraint


class SizeLimitError(CospecException):
    """Base exception for inputs beyond a configured size limit.

    Attributes:
        quantity: What was measured (e.g. 'vertices')
        value: The measured size
        limit: The active limit
    """

    def __init__(self, quantity: str, value: int, limit: int, reason: Optional[str] = None):
        """Initialize size limit error.

        Args:
            quantity: What was measured
            value: The measured size
            limit: The active limit
            reason: Optional explanation of where the limit comes from
        """
        message = f"Too many {quantity}: {value} exceeds the limit of {limit}"
        if reason:
            message += f" ({reason})"
        super().__init__(message)
        self.quantity = quantity
        self.value = value
        self.limit = limit
        self.reason = reason


class GraphSizeError(SizeLimitError):
    """Raised when a graph would exceed ``max_vertices`` (or graph6's 62)."""

    def __init__(self, n: int, limit: int, reason: Optional[str] = None):
        super().__init__("vertices", n, limit, reason)


class SachsLimitError(SizeLimitError):
    """Raised when the elementary-subgraph expansion is asked for too large a graph."""

    def __init__(self, n: int, limit: int):
        super().__init__("vertices", n, limit, "elementary subgraph enumeration")


class EnumerationLimitError(SizeLimitError):
    """Raised when an enumeration request is outside the exhaustive range.

    Examples:
        >>> from cospec.search import EnumSpec
        >>> EnumSpec(n=20, m=3)  # Raises EnumerationLimitError
    """
    pass


class PolynomialError(CospecException):
    """Base exception for polynomial arithmetic and root counting."""
    pass


class ZeroPolynomialError(PolynomialError):
    """Raised when an operation needs a nonzero polynomial.

    Attributes:
        operation: Name of the operation that rejected the zero polynomial
    """

    def __init__(self, operation: str):
        super().__init__(f"{operation} is undefined for the zero polynomial")
        self.operation = operation


class CharpolyError(CospecException):
    """Base exception for characteristic polynomial algorithms."""
    pass


class InexactDivisionError(CharpolyError):
    """Raised when a division that must be exact leaves a remainder.

    This can only happen on corrupted input; integer adjacency matrices
    always divide exactly in the trace recurrence.

    Attributes:
        step: Recurrence step at which the division failed
        numerator: The dividend
        denominator: The divisor
    """

    def __init__(self, step: int, numerator: int, denominator: int):
        super().__init__(
            f"Trace recurrence step {step}: {numerator} is not divisible by {denominator}"
        )
        self.step = step
        self.numerator = numerator
        self.denominator = denominator


class SearchError(CospecException):
    """Base exception for enumeration and mate classification."""
    pass


class DecompositionError(SearchError):
    """Raised when a graph has no valid A/B/C/D partition.

    Either there is no induced P4 to anchor the partition, or every anchor
    violates one of the complete-bipartite conditions. Both mean the input
    is not a graph cospectral to P_2(1,n).

    Attributes:
        reason: Which condition failed
    """

    def __init__(self, reason: str):
        super().__init__(f"No A/B/C/D partition: {reason}")
        self.reason = reason


class SerializationError(CospecException):
    """Base exception for text formats (graph6, builder expressions, reports)."""
    pass


class Graph6ParseError(SerializationError):
    """Raised when a graph6 line is malformed.

    Attributes:
        text: The offending line
        reason: What is wrong with it
        position: Optional byte offset of the problem
    """

    def __init__(self, text: str, reason: str, position: Optional[int] = None):
        message = f"Cannot parse graph6 '{text}'"
        if position is not None:
            message += f" at position {position}"
        message += f": {reason}"
        super().__init__(message)
        self.text = text
        self.reason = reason
        self.position = position


class ExpressionParseError(SerializationError):
    """Raised when a builder expression such as ``A(3)+2K1`` cannot be parsed.

    Attributes:
        text: The expression
        reason: What is wrong with it
        position: Optional character offset of the offending term
    """

    def __init__(self, text: str, reason: str, position: Optional[int] = None):
        message = f"Cannot parse graph expression '{text}'"
        if position is not None:
            message += f" at position {position}"
        message += f": {reason}"
        super().__init__(message)
        self.text = text
        self.reason = reason
        self.position = position


class ConfigurationError(CospecException):
    """Raised when a setting or environment variable has an invalid value.

    Attributes:
        setting: Setting or variable name
        value: The rejected value
    """

    def __init__(self, setting: str, value: Any, reason: str):
        super().__init__(f"Invalid configuration {setting}={value!r}: {reason}")
        self.setting = setting
        self.value = value
        self.reason = reason


__all__ = [
    'CospecException',
    'GraphError',
    'VertexRangeError',
    'LoopEdgeError',
    'InvalidParameterError',
    'SizeLimitError',
    'GraphSizeError',
    'SachsLimitError',
    'EnumerationLimitError',
    'PolynomialError',
    'ZeroPolynomialError',
    'CharpolyError',
    'InexactDivisionError',
    'SearchError',
    'DecompositionError',
    'SerializationError',
    'Graph6ParseError',
    'ExpressionParseError',
    'ConfigurationError',
    'ErrorContext',
]


class ErrorContext:
    """Context manager for adding context to exceptions.

    Wraps a code block and appends a description to any cospec exception
    raised inside it.

    Examples:
        >>> from cospec.exceptions import ErrorContext
        >>> from cospec.serialization import parse_graph6
        >>>
        >>> with ErrorContext("reading input line 3"):
        ...     parse_graph6("C~")
    """

    def __init__(self, context: str):
        """Initialize error context.

        Args:
            context: Description of what's being done
        """
        self.context = context

    def __enter__(self) -> 'ErrorContext':
        """Enter the context."""
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> bool:
        """Exit the context and enhance any cospec exception.

        Returns:
            False to propagate the exception
        """
        if exc_type is not None and issubclass(exc_type, CospecException):
            exc_val.message = f"{exc_val.message} (context: {self.context})"
            exc_val.args = (exc_val.message,)
        return False
