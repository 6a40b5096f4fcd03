"""Workbench for the general Sombor index SO_alpha on unicyclic graphs.

The package builds the structured families that are conjectured (and here
exhaustively confirmed at small orders) to maximize the index within a
diameter class, enumerates unicyclic graphs up to isomorphism, and checks
the scalar inequalities and sign constants that the extremal argument rests
on — all at desk scale, with deterministic outputs.
"""

from .canon import (
    CanonicalCode,
    are_isomorphic,
    canonical_code,
    canonical_graph,
    canonical_relabeling,
)
from .enumeration import (
    DEFAULT_CAP,
    EnumFilter,
    EnumResult,
    count_unicyclic,
    enumerate_unicyclic,
    free_trees,
    unicyclic_classes,
)
from .extremal import (
    ExtremalReport,
    PropertyReport,
    applicable_pairs,
    extremal_search,
    predicted_extremal,
    random_connected_graph,
    verify_transform_monotonicity,
)
from .families import (
    FamilySpec,
    c_family,
    closed_form_u,
    cycle,
    parse_family_spec,
    u_family,
    u_graph,
)
from .formats import (
    from_edge_list_text,
    from_graph6,
    load_graphs,
    save_graph6,
    to_edge_list_text,
    to_graph6,
)
from .graph import Graph, from_edge_list
from .indices import (
    edge_contribution,
    forgotten,
    general_sombor,
    general_sombor_by_edges,
    sombor,
)
from .inequalities import (
    CONSTANT_IDS,
    LEMMA_IDS,
    ConstantReport,
    GridSpec,
    LemmaReport,
    check_constant,
    check_lemma,
    get_constant,
)
from .transforms import EdgeSwap, apply_swap, parse_swap_tokens, relocate

__version__ = "0.1.0"

__all__ = [
    "CanonicalCode",
    "are_isomorphic",
    "canonical_code",
    "canonical_graph",
    "canonical_relabeling",
    "DEFAULT_CAP",
    "EnumFilter",
    "EnumResult",
    "count_unicyclic",
    "enumerate_unicyclic",
    "free_trees",
    "unicyclic_classes",
    "ExtremalReport",
    "PropertyReport",
    "applicable_pairs",
    "extremal_search",
    "predicted_extremal",
    "random_connected_graph",
    "verify_transform_monotonicity",
    "FamilySpec",
    "c_family",
    "closed_form_u",
    "cycle",
    "parse_family_spec",
    "u_family",
    "u_graph",
    "from_edge_list_text",
    "from_graph6",
    "load_graphs",
    "save_graph6",
    "to_edge_list_text",
    "to_graph6",
    "Graph",
    "from_edge_list",
    "edge_contribution",
    "forgotten",
    "general_sombor",
    "general_sombor_by_edges",
    "sombor",
    "CONSTANT_IDS",
    "LEMMA_IDS",
    "ConstantReport",
    "GridSpec",
    "LemmaReport",
    "check_constant",
    "check_lemma",
    "get_constant",
    "EdgeSwap",
    "apply_swap",
    "parse_swap_tokens",
    "relocate",
    "__version__",
]
