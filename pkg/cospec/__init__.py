"""
Cospec - exact spectral tools for small graphs.

Characteristic polynomials computed three independent ways, exact real-root
counting, canonical labelling, isomorph-free enumeration and cospectral-mate
search, with the double-star constructions built in.
"""

from cospec.graph import (
    Graph,
    Bipartition,
    make_graph,
    gen_basic,
    gen_double_star,
    gen_A_construction,
    gen_B_construction,
    gen_R,
    disjoint_union,
    induced_subgraph,
    delete_vertices,
    components,
    is_connected,
    is_bipartite,
    diameter,
    degree_sequence,
    adjacency_matrix,
    to_networkx,
    from_networkx,
)
from cospec.polynomial import (
    IntPolynomial,
    RootCount,
    poly_add,
    poly_sub,
    poly_mul,
    poly_scale,
    poly_shift,
    square_free_part,
    square_free_decomposition,
    sturm_sequence,
    count_distinct_roots_above,
    count_roots_above,
    certify_roots_above,
    eval_sign,
    numeric_roots,
)
from cospec.iso import (
    CanonicalForm,
    ForbiddenReport,
    canonical_form,
    canonical_labeling,
    is_isomorphic,
    induced_contains,
    forbidden_report,
)
from cospec.charpoly import (
    SchwenkTrace,
    charpoly,
    charpoly_exact,
    charpoly_sachs,
    charpoly_schwenk,
    double_star_charpoly,
    double_star_extreme_eigs,
    count_non_c4_two_matchings,
    interlacing_check,
    numeric_spectrum,
    spectral_obstruction,
)
from cospec.search import (
    EnumSpec,
    MateEntry,
    MateReport,
    MateForm,
    Verdict,
    DsVerdict,
    AbcdPartition,
    enumerate_graphs,
    iter_graphs,
    collect_graphs,
    cospectral_mates,
    ds_verdict,
    abcd_decompose,
    gprime_charpoly_formula,
    classify_mate,
    star_mate,
    star_mate_family,
    predicted_mates,
    predicted_is_ds,
    double_star_survey,
)
from cospec.context import SearchContext, SearchSettings, get_settings, search_settings
from cospec.serialization import (
    parse_graph6,
    write_graph6,
    read_graph6_lines,
    report_to_dict,
    report_to_json,
    save_report,
    ReportEncoder,
)
from cospec.expressions import parse_graph_expression
from cospec import utils

from cospec.exceptions import (
    # Base exception
    CospecException,

    # Graph errors
    GraphError,
    VertexRangeError,
    LoopEdgeError,
    InvalidParameterError,

    # Size limits
    SizeLimitError,
    GraphSizeError,
    SachsLimitError,
    EnumerationLimitError,

    # Algebra errors
    PolynomialError,
    ZeroPolynomialError,
    CharpolyError,
    InexactDivisionError,

    # Search errors
    SearchError,
    DecompositionError,

    # Text formats
    SerializationError,
    Graph6ParseError,
    ExpressionParseError,

    # Other errors
    ConfigurationError,

    # Utilities
    ErrorContext,
)

__version__ = "0.1.0"

__all__ = [
    # Graphs
    "Graph",
    "Bipartition",
    "make_graph",
    "gen_basic",
    "gen_double_star",
    "gen_A_construction",
    "gen_B_construction",
    "gen_R",
    "disjoint_union",
    "induced_subgraph",
    "delete_vertices",
    "components",
    "is_connected",
    "is_bipartite",
    "diameter",
    "degree_sequence",
    "adjacency_matrix",
    "to_networkx",
    "from_networkx",

    # Polynomials
    "IntPolynomial",
    "RootCount",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_scale",
    "poly_shift",
    "square_free_part",
    "square_free_decomposition",
    "sturm_sequence",
    "count_distinct_roots_above",
    "count_roots_above",
    "certify_roots_above",
    "eval_sign",
    "numeric_roots",

    # Isomorphism
    "CanonicalForm",
    "ForbiddenReport",
    "canonical_form",
    "canonical_labeling",
    "is_isomorphic",
    "induced_contains",
    "forbidden_report",

    # Characteristic polynomials
    "SchwenkTrace",
    "charpoly",
    "charpoly_exact",
    "charpoly_sachs",
    "charpoly_schwenk",
    "double_star_charpoly",
    "double_star_extreme_eigs",
    "count_non_c4_two_matchings",
    "interlacing_check",
    "numeric_spectrum",
    "spectral_obstruction",

    # Search
    "EnumSpec",
    "MateEntry",
    "MateReport",
    "MateForm",
    "Verdict",
    "DsVerdict",
    "AbcdPartition",
    "enumerate_graphs",
    "iter_graphs",
    "collect_graphs",
    "cospectral_mates",
    "ds_verdict",
    "abcd_decompose",
    "gprime_charpoly_formula",
    "classify_mate",
    "star_mate",
    "star_mate_family",
    "predicted_mates",
    "predicted_is_ds",
    "double_star_survey",

    # Settings
    "SearchContext",
    "SearchSettings",
    "get_settings",
    "search_settings",

    # Text formats
    "parse_graph6",
    "write_graph6",
    "read_graph6_lines",
    "report_to_dict",
    "report_to_json",
    "save_report",
    "ReportEncoder",
    "parse_graph_expression",

    # Modules
    "utils",

    # Exceptions
    "CospecException",
    "GraphError",
    "VertexRangeError",
    "LoopEdgeError",
    "InvalidParameterError",
    "SizeLimitError",
    "GraphSizeError",
    "SachsLimitError",
    "EnumerationLimitError",
    "PolynomialError",
    "ZeroPolynomialError",
    "CharpolyError",
    "InexactDivisionError",
    "SearchError",
    "DecompositionError",
    "SerializationError",
    "Graph6ParseError",
    "ExpressionParseError",
    "ConfigurationError",
    "ErrorContext",
]
