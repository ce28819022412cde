"""Subgroup perfect codes and (a,b)-regular sets in Cayley graphs.

A subgroup H of a finite group G is an (a,b)-regular set when some
inverse-closed, identity-free S makes every vertex of H adjacent to
exactly a vertices of H and every outside vertex adjacent to exactly b,
in the Cayley graph on G with connection set S. This package decomposes
G minus H into double-coset blocks, builds such an S from transversal
bundles through each block, decides the perfect-code case (a, b) = (0, 1),
and verifies everything independently by neighbor counting.
"""

from __future__ import annotations

from ._kernels import BACKEND
from .builder import ConnectionSet, build_connection_set, inner_set
from .cosets import (
    ClassBlock,
    ClassDecomposition,
    Subgroup,
    all_subgroups,
    class_decomposition,
    conj_intersection,
    double_coset,
    inverse_closed_core,
    involutions_in_coset,
    load_subgroup_json,
    right_coset,
    subgroup_closure,
)
from .errors import *  # noqa: F401,F403
from .errors import __all__ as _error_names
from .factorization import (
    LayeredCosetGraph,
    Matching,
    build_layered_graph,
    matching_to_elements,
    near_one_factorization_odd,
    one_factorize_bipartite,
    one_factorize_complete_even,
    resolve_matching,
)
from .groups import (
    GroupTable,
    Permutation,
    catalog,
    from_permutation_generators,
    from_table,
    load_group_json,
)
from .perfect_code import PerfectCodeVerdict, is_perfect_code, oracle_inverse_closed_transversal
from .transversals import (
    TransversalBundle,
    bundle_for_block,
    bundle_non_self_paired,
    bundle_self_paired_even,
    bundle_self_paired_odd,
)
from .verifier import RegularSetReport, check_regular_set, exhaustive_regular_search, inverse_orbits

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ClassBlock",
    "ClassDecomposition",
    "ConnectionSet",
    "GroupTable",
    "LayeredCosetGraph",
    "Matching",
    "PerfectCodeVerdict",
    "Permutation",
    "RegularSetReport",
    "Subgroup",
    "TransversalBundle",
    "all_subgroups",
    "build_connection_set",
    "build_layered_graph",
    "bundle_for_block",
    "bundle_non_self_paired",
    "bundle_self_paired_even",
    "bundle_self_paired_odd",
    "catalog",
    "check_regular_set",
    "class_decomposition",
    "conj_intersection",
    "double_coset",
    "exhaustive_regular_search",
    "from_permutation_generators",
    "from_table",
    "inner_set",
    "inverse_closed_core",
    "inverse_orbits",
    "involutions_in_coset",
    "is_perfect_code",
    "load_group_json",
    "load_subgroup_json",
    "matching_to_elements",
    "near_one_factorization_odd",
    "one_factorize_bipartite",
    "one_factorize_complete_even",
    "oracle_inverse_closed_transversal",
    "resolve_matching",
    "right_coset",
    "subgroup_closure",
    "__version__",
    *_error_names,
]
