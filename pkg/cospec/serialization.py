"""graph6 text and report documents for cospec results."""

import json
import math
from enum import Enum
from typing import IO, Any, Dict, Iterable, List, Optional, Union

from cospec.exceptions import ErrorContext, Graph6ParseError, GraphSizeError
from cospec.graph import Graph
from cospec.iso import CanonicalForm, ForbiddenReport
from cospec.polynomial import IntPolynomial
from cospec.search import AbcdPartition, DsVerdict, EnumSpec, MateEntry, MateReport, SurveyRow
from cospec.utils import bit

__version__ = "1.0"

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_VERTICES = 62
_OFFSET = 63


def _bit_count(n: int) -> int:
    return n * (n - 1) // 2


def parse_graph6(line: str) -> Graph:
    """
    Parse one short-form graph6 line.

    The first byte is ``n + 63``; the upper triangle follows in column order
    (0,1), (0,2), (1,2), (0,3), ... six bits per byte, most significant first,
    each byte offset by 63 and the last one zero-padded. An optional
    ``>>graph6<<`` header is skipped.

    Args:
        line: graph6 text; surrounding whitespace is ignored

    Returns:
        Graph with the encoded labelling

    Raises:
        Graph6ParseError: Empty input, non-printable byte, unsupported
            header, wrong length, or nonzero padding

    Examples:
        >>> parse_graph6('Bw').num_edges
        3
    """
    text = line.strip()
    data = text[len(GRAPH6_HEADER):] if text.startswith(GRAPH6_HEADER) else text
    if not data:
        raise Graph6ParseError(line, "empty graph6 string")
    for position, char in enumerate(data):
        if not _OFFSET <= ord(char) <= 126:
            raise Graph6ParseError(line, f"byte {char!r} outside the graph6 range", position)
    n = ord(data[0]) - _OFFSET
    if n > GRAPH6_MAX_VERTICES:
        raise Graph6ParseError(line, "long-form header (more than 62 vertices) is not supported", 0)
    bits = _bit_count(n)
    expected = math.ceil(bits / 6)
    body = data[1:]
    if len(body) != expected:
        state = "truncated" if len(body) < expected else "trailing bytes after"
        reason = f"{state} bit field: {len(body)} bytes for n={n}, need {expected}"
        raise Graph6ParseError(line, reason)
    value = 0
    for char in body:
        value = (value << 6) | (ord(char) - _OFFSET)
    padding = 6 * expected - bits
    if value & ((1 << padding) - 1):
        raise Graph6ParseError(line, "nonzero padding bits", len(data) - 1)
    value >>= padding
    adj = [0] * n
    k = bits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                adj[i] |= bit(j)
                adj[j] |= bit(i)
            k -= 1
    return Graph(n, adj)


def write_graph6(g: Graph) -> str:
    """
    Short-form graph6 text for ``g`` under its own labelling.

    Raises:
        GraphSizeError: If ``g`` has more than 62 vertices

    Examples:
        >>> write_graph6(make_graph(2, [(0, 1)]))
        'A_'
    """
    if g.n > GRAPH6_MAX_VERTICES:
        raise GraphSizeError(g.n, GRAPH6_MAX_VERTICES, "short-form graph6")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    bits += [0] * (-len(bits) % 6)
    chars = [chr(g.n + _OFFSET)]
    for start in range(0, len(bits), 6):
        group = 0
        for b in bits[start:start + 6]:
            group = (group << 1) | b
        chars.append(chr(group + _OFFSET))
    return "".join(chars)


def read_graph6_lines(source: Union[IO[str], Iterable[str]]) -> List[Graph]:
    """
    Parse every nonblank line of ``source``.

    Raises:
        Graph6ParseError: With the 1-based line number appended as context
    """
    graphs = []
    for number, line in enumerate(source, start=1):
        if not line.strip():
            continue
        with ErrorContext(f"line {number}"):
            graphs.append(parse_graph6(line))
    return graphs


def graph_to_dict(g: Graph) -> Dict[str, Any]:
    """Graph as ``{'n', 'edges', 'graph6'}``; graph6 is omitted above 62 vertices."""
    data: Dict[str, Any] = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.n <= GRAPH6_MAX_VERTICES:
        data["graph6"] = write_graph6(g)
    return data


def _scope_to_dict(spec: EnumSpec) -> Dict[str, Any]:
    return {
        "n": spec.n,
        "m": spec.m,
        "bipartite_only": spec.bipartite_only,
        "connected_only": spec.connected_only,
        "max_degree": spec.max_degree,
        "max_spectral_radius": spec.max_spectral_radius,
    }


def _mate_to_dict(entry: MateEntry) -> Dict[str, Any]:
    data = graph_to_dict(entry.graph)
    data["canonical"] = entry.form.hex()
    data["classification"] = entry.tag or None
    return data


def report_to_dict(obj: Any) -> Any:
    """
    Plain JSON-ready structure for any cospec result.

    Handles MateReport, DsVerdict, ForbiddenReport, AbcdPartition, SurveyRow,
    EnumSpec, Graph, IntPolynomial and CanonicalForm; lists are converted
    element-wise and other values pass through.
    """
    if isinstance(obj, MateReport):
        return {
            "target": graph_to_dict(obj.target),
            "target_poly": str(obj.target_poly),
            "ds": obj.is_ds,
            "mate_count": len(obj.mates),
            "mates": [_mate_to_dict(entry) for entry in obj.mates],
            "exhaustive": obj.exhaustive,
            "scope": _scope_to_dict(obj.scope),
        }
    if isinstance(obj, DsVerdict):
        return {
            "verdict": obj.verdict.value,
            "mate_count": len(obj.mates),
            "mates": [_mate_to_dict(entry) for entry in obj.mates],
            "exhaustive": obj.exhaustive,
            "scope": _scope_to_dict(obj.scope),
        }
    if isinstance(obj, ForbiddenReport):
        return {
            "patterns": {
                name: sorted(witness) if witness is not None else None
                for name, witness in obj.witnesses.items()
            },
            "flagged": obj.flagged,
            "mate_patterns_clear": obj.mate_patterns_clear,
        }
    if isinstance(obj, AbcdPartition):
        return {
            "sizes": list(obj.sizes),
            "A": sorted(obj.A),
            "B": sorted(obj.B),
            "C": sorted(obj.C),
            "D": sorted(obj.D),
            "path": list(obj.path),
        }
    if isinstance(obj, SurveyRow):
        return {"a": obj.a, "b": obj.b, "verdict": obj.verdict.value, "mate_count": obj.mates}
    if isinstance(obj, EnumSpec):
        return _scope_to_dict(obj)
    if isinstance(obj, Graph):
        return graph_to_dict(obj)
    if isinstance(obj, IntPolynomial):
        return str(obj)
    if isinstance(obj, CanonicalForm):
        return obj.hex()
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {key: report_to_dict(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [report_to_dict(item) for item in obj]
    return obj


def make_document(
    command: str,
    inputs: Dict[str, Any],
    results: Any,
    exhaustive: Optional[bool] = None,
    elapsed: float = 0.0,
) -> Dict[str, Any]:
    """
    Assemble a report document with a fixed field order.

    Examples:
        >>> doc = make_document('charpoly', {'graph': 'Bw'}, {'charpoly': 'x^3 - 3*x - 2'})
        >>> list(doc)
        ['version', 'command', 'inputs', 'results', 'exhaustive', 'timing']
    """
    return {
        "version": __version__,
        "command": command,
        "inputs": inputs,
        "results": report_to_dict(results),
        "exhaustive": exhaustive,
        "timing": {"elapsed_seconds": round(elapsed, 6)},
    }


class ReportEncoder(json.JSONEncoder):
    """
    JSON encoder for cospec objects.

    Examples:
        >>> json.dumps({'poly': IntPolynomial([-1, 0, 1])}, cls=ReportEncoder)
        '{"poly": "x^2 - 1"}'
    """

    def default(self, obj):
        """Encode cospec objects."""
        if isinstance(obj, (frozenset, set)):
            return sorted(obj)
        converted = report_to_dict(obj)
        if converted is obj:
            return super().default(obj)
        return converted


def report_to_json(document: Any, **kwargs) -> str:
    """Serialize a document (or any result) to JSON."""
    kwargs.setdefault("indent", 2)
    return json.dumps(document, cls=ReportEncoder, **kwargs)


def save_report(document: Any, filename: str) -> None:
    """Write ``report_to_json(document)`` to ``filename``."""
    with open(filename, "w", encoding="utf-8") as f:
        f.write(report_to_json(document))
        f.write("\n")


def _text_lines(value: Any, indent: int) -> List[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, dict):
                lines.append(f"{pad}-")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")
    return lines


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return "[]" if not value else " ".join(str(item) for item in value)
    if isinstance(value, dict):
        return "{}"
    return str(value)


def render_text(document: Dict[str, Any]) -> str:
    """Indented plain-text rendering carrying the same values as the JSON form."""
    return "\n".join(_text_lines(document, 0))


__all__ = [
    "GRAPH6_HEADER",
    "GRAPH6_MAX_VERTICES",
    "parse_graph6",
    "write_graph6",
    "read_graph6_lines",
    "graph_to_dict",
    "report_to_dict",
    "make_document",
    "ReportEncoder",
    "report_to_json",
    "save_report",
    "render_text",
]
