"""Combinatorial search toolkit for bounding vertex Folkman numbers.

Core objects: bitset graphs with graph6 I/O, arrowing deciders, canonical
labeling, the independent-vertex extension search, and a checkpointed CLI
pipeline for staged lower/upper bound runs.
"""

from .arrowing import (
    ArrowTarget,
    ClassSpec,
    arrows,
    arrows_2r3,
    arrows_oracle,
    find_bad_partition,
    in_class,
    join_lift_check,
    mp_extremal_graph,
    target_is_valid,
)
from .canon import are_isomorphic, canonical_form, canonical_graph, dedup
from .cliques import (
    SubsetFamily,
    clique_number,
    has_kclique,
    independence_number,
    is_maximal_in_class,
    is_plus_k3,
    maximal_independent_sets,
    maximal_k3free_subsets,
)
from .graph import (
    Graph,
    add_vertex,
    duplicate_vertex,
    is_sperner,
    join,
    non_edges,
    remove_vertices,
    sperner_pair,
)
from .graph6 import parse_graph6, write_graph6
from .kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = [
    "ArrowTarget",
    "ClassSpec",
    "Graph",
    "KERNEL_BACKEND",
    "SubsetFamily",
    "add_vertex",
    "are_isomorphic",
    "arrows",
    "arrows_2r3",
    "arrows_oracle",
    "canonical_form",
    "canonical_graph",
    "clique_number",
    "dedup",
    "duplicate_vertex",
    "find_bad_partition",
    "has_kclique",
    "in_class",
    "independence_number",
    "is_maximal_in_class",
    "is_plus_k3",
    "is_sperner",
    "join",
    "join_lift_check",
    "maximal_independent_sets",
    "maximal_k3free_subsets",
    "mp_extremal_graph",
    "non_edges",
    "parse_graph6",
    "remove_vertices",
    "sperner_pair",
    "target_is_valid",
    "write_graph6",
]
