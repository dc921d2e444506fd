"""graphinverse: exact arithmetic in graph inverse semigroups, a decision
procedure for the existence of non-discrete locally compact semigroup
topologies, and constructive neighborhood bases with exact verifiers.

The library works with finitely presented directed multigraphs whose
parallel-edge bundles may be countably infinite and which may carry an
infinite family of extra isolated vertices.  Nonzero semigroup elements
are kept in the normal form u * v^-1 (paths with common range), so
equality and multiplication are exact.
"""

from .errors import (
    CompositionError,
    GisError,
    GraphMismatch,
    ParseError,
    UnknownVertex,
    ValidationError,
    WitnessMismatch,
)
from .graphs import (
    Bundle,
    Cardinality,
    Graph,
    INFINITE,
    edges_between,
    extra_vertex,
    format_graph,
    parse_graph,
    polycyclic_graph,
)
from .paths import Edge, Path, edge_path, empty_path, enumerate_paths, parse_path
from .elements import (
    Element,
    ZERO,
    enumerate_elements,
    invert,
    multiply,
    parse_element,
    path_element,
    vertex_element,
)
from .laws import verify_laws, verify_relations
from .reports import Check, Report
from .topology import (
    BadPair,
    CycleReaching,
    FinitenessVerdict,
    InfiniteBundleReaching,
    InfiniteVertexFamily,
    Verdict,
    decide,
    find_bad_pair,
    paths_into_vertex_finite,
    reaches,
    satisfies_star,
)
from .bases import (
    BundleBase,
    NeighborhoodBase,
    VertexFamilyBase,
    construct_base,
    verify_base_axioms,
    verify_continuity,
)

__all__ = [
    "GisError", "ParseError", "ValidationError", "CompositionError",
    "GraphMismatch", "UnknownVertex", "WitnessMismatch",
    "Cardinality", "INFINITE", "Bundle", "Graph",
    "parse_graph", "format_graph", "polycyclic_graph", "edges_between",
    "extra_vertex",
    "Edge", "Path", "empty_path", "edge_path", "parse_path", "enumerate_paths",
    "Element", "ZERO", "multiply", "invert", "parse_element",
    "vertex_element", "path_element", "enumerate_elements",
    "verify_relations", "verify_laws", "Check", "Report",
    "reaches", "paths_into_vertex_finite", "FinitenessVerdict",
    "CycleReaching", "InfiniteBundleReaching",
    "find_bad_pair", "decide", "satisfies_star",
    "Verdict", "BadPair", "InfiniteVertexFamily",
    "NeighborhoodBase", "VertexFamilyBase", "BundleBase",
    "construct_base", "verify_base_axioms", "verify_continuity",
]

__version__ = "0.1.0"
