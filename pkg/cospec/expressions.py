"""
Builder expressions for the named graph families.

An expression is a ``+``-separated disjoint union of terms, each optionally
prefixed by a repeat count::

    P2(1,4)          double star
    A(3)+2K1         construction A_3 with two isolated vertices
    B(2)+4K1
    K(2,3)           complete bipartite; K(5) is complete
    path(5), cycle(4), star(4), complete(4), empty(3), R
"""

import re
from typing import Callable, Dict, List, Tuple

from cospec.exceptions import CospecException, ExpressionParseError
from cospec.graph import (
    Graph,
    disjoint_union,
    gen_A_construction,
    gen_B_construction,
    gen_basic,
    gen_double_star,
    gen_R,
)
from cospec.serialization import parse_graph6

_TERM = re.compile(r"^(?P<count>\d*)(?P<name>[A-Za-z][A-Za-z0-9_]*?)(?:\((?P<args>[^()]*)\))?$")


def _complete_family(*args: int) -> Graph:
    if len(args) == 1:
        return gen_basic("complete", args[0])
    return gen_basic("complete_bipartite", *args)


# name -> (allowed argument counts, builder)
_BUILDERS: Dict[str, Tuple[Tuple[int, ...], Callable[..., Graph]]] = {
    "P2": ((2,), gen_double_star),
    "A": ((1,), gen_A_construction),
    "B": ((1,), gen_B_construction),
    "K": ((1, 2), _complete_family),
    "K1": ((0,), lambda: gen_basic("empty", 1)),
    "R": ((0,), gen_R),
    "path": ((1,), lambda n: gen_basic("path", n)),
    "cycle": ((1,), lambda n: gen_basic("cycle", n)),
    "star": ((1,), lambda k: gen_basic("star", k)),
    "complete": ((1,), lambda n: gen_basic("complete", n)),
    "empty": ((1,), lambda n: gen_basic("empty", n)),
}


def _split_terms(text: str) -> List[Tuple[int, str]]:
    terms = []
    start = 0
    for piece in text.split("+"):
        stripped = piece.strip()
        offset = start + len(piece) - len(piece.lstrip())
        terms.append((offset, stripped))
        start += len(piece) + 1
    return terms


def _build_term(text: str, offset: int, term: str) -> Graph:
    match = _TERM.match(term.replace(" ", ""))
    if match is None or match.group("name") not in _BUILDERS:
        raise ExpressionParseError(text, f"unknown term '{term}'", offset)
    name = match.group("name")
    raw_args = match.group("args")
    try:
        args = [int(a) for a in raw_args.split(",")] if raw_args else []
    except ValueError:
        reason = f"arguments of '{term}' must be integers"
        raise ExpressionParseError(text, reason, offset) from None
    arities, builder = _BUILDERS[name]
    if len(args) not in arities:
        allowed = " or ".join(map(str, arities))
        raise ExpressionParseError(text, f"'{name}' takes {allowed} argument(s)", offset)
    count = int(match.group("count")) if match.group("count") else 1
    try:
        piece = builder(*args)
    except CospecException as exc:
        raise ExpressionParseError(text, f"'{term}': {exc.message}", offset) from exc
    result = Graph(0, [])
    for _ in range(count):
        result = disjoint_union(result, piece)
    return result


def parse_graph_expression(text: str) -> Graph:
    """
    Build the graph an expression describes.

    Args:
        text: Expression such as ``'A(3)+2K1'``

    Returns:
        Disjoint union of the terms, labelled left to right

    Raises:
        ExpressionParseError: Empty expression, unknown term, wrong arity or
            an invalid family parameter
        GraphSizeError: If the union exceeds ``max_vertices``

    Examples:
        >>> parse_graph_expression('A(3)+2K1').n
        9
    """
    if not text.strip():
        raise ExpressionParseError(text, "empty expression")
    result = Graph(0, [])
    for offset, term in _split_terms(text):
        if not term:
            raise ExpressionParseError(text, "empty term", offset)
        result = disjoint_union(result, _build_term(text, offset, term))
    return result


def is_expression(text: str) -> bool:
    """True if ``text`` cannot be graph6 (it has a byte outside '?'..'~') or is ``R``."""
    stripped = text.strip()
    return stripped == "R" or any(not 63 <= ord(c) <= 126 for c in stripped)


def parse_graph_input(text: str) -> Graph:
    """Parse a command-line graph argument: a builder expression or a graph6 line."""
    if is_expression(text):
        return parse_graph_expression(text)
    return parse_graph6(text)


__all__ = ["parse_graph_expression", "parse_graph_input", "is_expression"]
