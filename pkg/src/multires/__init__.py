"""Exact resolvability invariants of connected graphs.

Six dimension variants built from (representation kind, comparison scope):
vector or multiset representations, compared over all pairs, adjacent pairs,
pairs outside the landmark set, or adjacent pairs outside it.
"""

from .bounds import (
    Bound,
    BoundReport,
    InfiniteCertificate,
    clique_log_bound,
    dms_extremal_check,
    g_bound,
    infinite_certificates,
    lower_bounds,
    maxsubgraph_bound,
)
from .errors import (
    BudgetExhaustedError,
    CapExceededError,
    DisconnectedGraphError,
    GraphParseError,
    GraphValidationError,
    MultiresError,
    NoClosedFormError,
    NoLeaflessSubgraphError,
)
from .generators import (
    CliqueGadget,
    FamilySpec,
    all_connected,
    gen,
    gen_clique_gadget,
    graph_from_mask,
    parse_family_spec,
)
from .graph import (
    DistMatrix,
    Graph,
    all_pairs_distances,
    bipartition,
    chromatic_number,
    clique_number,
    invariants,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
    two_core,
)
from .multisets import Variant, representation, representation_multiset
from .solver import (
    INFINITE,
    Certificate,
    DimensionResult,
    SolverOptions,
    certify,
    dimension,
    naive_all_dimensions,
    required_vertices,
    solve_all,
)
from .verify import (
    TheoremCheck,
    closed_form,
    corpus_scan,
    run_all,
    run_theorem,
    wheel_path_structure,
)

__version__ = "0.1.0"

__all__ = [
    "Bound",
    "BoundReport",
    "BudgetExhaustedError",
    "CapExceededError",
    "Certificate",
    "CliqueGadget",
    "DimensionResult",
    "DisconnectedGraphError",
    "DistMatrix",
    "FamilySpec",
    "Graph",
    "GraphParseError",
    "GraphValidationError",
    "INFINITE",
    "InfiniteCertificate",
    "MultiresError",
    "NoClosedFormError",
    "NoLeaflessSubgraphError",
    "SolverOptions",
    "TheoremCheck",
    "Variant",
    "all_connected",
    "all_pairs_distances",
    "bipartition",
    "certify",
    "chromatic_number",
    "clique_log_bound",
    "clique_number",
    "closed_form",
    "corpus_scan",
    "dimension",
    "dms_extremal_check",
    "g_bound",
    "gen",
    "gen_clique_gadget",
    "graph_from_mask",
    "infinite_certificates",
    "invariants",
    "lower_bounds",
    "maxsubgraph_bound",
    "naive_all_dimensions",
    "parse_edge_list",
    "parse_family_spec",
    "parse_graph6",
    "representation",
    "representation_multiset",
    "required_vertices",
    "run_all",
    "run_theorem",
    "solve_all",
    "to_edge_list",
    "to_graph6",
    "two_core",
    "wheel_path_structure",
]
