"""Minimal dominating sets, their expansion/contraction reconfiguration
graphs, graph-family generators, and a desk-scale verification harness."""

from .canonical import CanonicalForm, canonical_form, canonical_string, isomorphic
from .domination import (
    DominationProfile,
    MdsCollection,
    classify_vertices,
    domination_number,
    enumerate_mds,
    exhaustive_minimal_sets,
    is_dominating,
    is_minimal_dominating,
    minimum_mds,
)
from .errors import (
    DomreconError,
    FormatError,
    GraphConstructionError,
    NotDominating,
    NotMinimal,
    SizeLimit,
    UniversalVertexPresent,
)
from .formats import (
    edge_list_decode,
    edge_list_encode,
    graph6_decode,
    graph6_encode,
    to_dot,
)
from .graphs import (
    Graph,
    GraphMetrics,
    bits,
    cartesian_product,
    closed_neighborhood,
    complement,
    connected_components,
    delete_closed_neighborhood,
    diameter,
    disjoint_union,
    girth,
    induced_subgraph,
    join,
    make_graph,
    mask_of,
    metrics,
    relabel,
)
from .reconfig import (
    ReconfigGraph,
    build_gamma_graph,
    build_reconfig_graph,
    gamma_adjacent,
    mds_adjacent,
)
from .scans import ScanReport, load_corpus, scan_corpus
from .theorems import TheoremReport, verify_theorem

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "DominationProfile",
    "DomreconError",
    "FormatError",
    "Graph",
    "GraphConstructionError",
    "GraphMetrics",
    "MdsCollection",
    "NotDominating",
    "NotMinimal",
    "ReconfigGraph",
    "ScanReport",
    "SizeLimit",
    "TheoremReport",
    "UniversalVertexPresent",
    "bits",
    "build_gamma_graph",
    "build_reconfig_graph",
    "canonical_form",
    "canonical_string",
    "cartesian_product",
    "classify_vertices",
    "closed_neighborhood",
    "complement",
    "connected_components",
    "delete_closed_neighborhood",
    "diameter",
    "disjoint_union",
    "domination_number",
    "edge_list_decode",
    "edge_list_encode",
    "enumerate_mds",
    "exhaustive_minimal_sets",
    "gamma_adjacent",
    "girth",
    "graph6_decode",
    "graph6_encode",
    "induced_subgraph",
    "is_dominating",
    "is_minimal_dominating",
    "isomorphic",
    "join",
    "load_corpus",
    "make_graph",
    "mask_of",
    "mds_adjacent",
    "metrics",
    "minimum_mds",
    "relabel",
    "scan_corpus",
    "to_dot",
    "verify_theorem",
]
