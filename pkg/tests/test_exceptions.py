"""Tests for the exception hierarchy."""

import pytest

from cospec.exceptions import (
    CharpolyError,
    ConfigurationError,
    CospecException,
    DecompositionError,
    EnumerationLimitError,
    ErrorContext,
    ExpressionParseError,
    Graph6ParseError,
    GraphError,
    GraphSizeError,
    InexactDivisionError,
    InvalidParameterError,
    LoopEdgeError,
    PolynomialError,
    SachsLimitError,
    SearchError,
    SerializationError,
    SizeLimitError,
    VertexRangeError,
    ZeroPolynomialError,
)
from cospec.graph import gen_basic, make_graph
from cospec.serialization import parse_graph6


class TestHierarchy:
    """Test exception inheritance."""

    @pytest.mark.parametrize(
        "child, parent",
        [
            (VertexRangeError, GraphError),
            (LoopEdgeError, GraphError),
            (InvalidParameterError, GraphError),
            (GraphSizeError, SizeLimitError),
            (SachsLimitError, SizeLimitError),
            (EnumerationLimitError, SizeLimitError),
            (ZeroPolynomialError, PolynomialError),
            (InexactDivisionError, CharpolyError),
            (DecompositionError, SearchError),
            (Graph6ParseError, SerializationError),
            (ExpressionParseError, SerializationError),
        ],
    )
    def test_parent(self, child, parent):
        """Test each error sits under its category and the base class."""
        assert issubclass(child, parent)
        assert issubclass(child, CospecException)

    def test_configuration_is_direct(self):
        """Test configuration errors derive from the base class."""
        assert ConfigurationError.__bases__ == (CospecException,)


class TestAttributes:
    """Test messages and attributes."""

    def test_vertex_range(self):
        """Test the vertex and order are recorded."""
        exc = VertexRangeError(5, 3)
        assert exc.vertex == 5 and exc.n == 3
        assert "out of range" in str(exc)

    def test_invalid_parameter(self):
        """Test the name, value and constraint are recorded."""
        exc = InvalidParameterError("k", 2, "must be >= 3")
        assert exc.name == "k"
        assert exc.value == 2
        assert "must be >= 3" in str(exc)

    def test_size_limit_reason(self):
        """Test the optional reason is appended."""
        exc = GraphSizeError(70, 64)
        assert exc.quantity == "vertices"
        assert exc.value == 70 and exc.limit == 64
        assert str(exc) == "Too many vertices: 70 exceeds the limit of 64"
        assert "elementary subgraph" in str(SachsLimitError(30, 24))

    def test_inexact_division(self):
        """Test the recurrence step is recorded."""
        exc = InexactDivisionError(3, 7, 3)
        assert (exc.step, exc.numerator, exc.denominator) == (3, 7, 3)

    def test_parse_errors(self):
        """Test the position appears only when given."""
        exc = Graph6ParseError("C", "truncated")
        assert exc.position is None
        assert "position" not in str(exc)
        exc = ExpressionParseError("K1+Q(2)", "unknown family 'Q'", 3)
        assert "at position 3" in str(exc)
        assert exc.reason == "unknown family 'Q'"

    def test_configuration(self):
        """Test the setting and value appear in the message."""
        exc = ConfigurationError("workers", 0, "must be a positive integer")
        assert exc.setting == "workers"
        assert str(exc).startswith("Invalid configuration workers=0")

    def test_repr(self):
        """Test repr names the class."""
        assert repr(ZeroPolynomialError("degree")).startswith("ZeroPolynomialError(")


class TestRaisedByLibrary:
    """Test library functions raise the documented types."""

    def test_make_graph(self):
        """Test malformed edges."""
        with pytest.raises(LoopEdgeError):
            make_graph(3, [(1, 1)])
        with pytest.raises(VertexRangeError):
            make_graph(2, [(0, 2)])

    def test_family_parameter(self):
        """Test a cycle needs three vertices."""
        with pytest.raises(InvalidParameterError):
            gen_basic("cycle", 2)


class TestErrorContext:
    """Test the ErrorContext manager."""

    def test_context_appended(self):
        """Test the description is added to cospec errors."""
        with pytest.raises(Graph6ParseError) as exc_info:
            with ErrorContext("reading input line 3"):
                parse_graph6("C")
        assert "(context: reading input line 3)" in str(exc_info.value)
        assert exc_info.value.message.endswith("(context: reading input line 3)")

    def test_other_errors_untouched(self):
        """Test non-cospec exceptions pass through unchanged."""
        with pytest.raises(KeyError) as exc_info:
            with ErrorContext("lookup"):
                raise KeyError("x")
        assert "context" not in str(exc_info.value)
