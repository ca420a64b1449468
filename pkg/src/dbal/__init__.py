"""Decide at which distances a finite connected graph is distance-balanced."""

from .balance import (
    BalanceProfile,
    PairBalance,
    balance_profile,
    gp2_mixed_distance,
    gp_balance_profile,
    is_distance_degree_regular,
    is_l_distance_balanced,
    w_partition,
)
from .classifiers import (
    DiamThreeCase,
    DiamTwoKind,
    classify_diameter_three_bipartite,
    classify_diameter_two,
    gp2_predicted_profile,
    join_factorization,
)
from .generators import (
    CayleySpec,
    GPParams,
    GroupTable,
    cayley,
    circulant,
    complete,
    complete_bipartite,
    cycle,
    cyclic_group,
    dihedral_group,
    direct_product,
    disjoint_union,
    from_spec,
    gp,
    hypercube,
    join,
    path,
    permutation_group_closure,
)
from .graph import (
    UNREACHABLE,
    Bipartition,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    bfs_distances,
    bipartition,
    build_graph,
    complement,
    connected_components,
    degree_sequence,
    diameter,
    distance_shell,
    induced_subgraph,
    is_regular,
)

__version__ = "0.1.0"

__all__ = [
    "all_pairs_distances",
    "balance_profile",
    "BalanceProfile",
    "bfs_distances",
    "Bipartition",
    "bipartition",
    "build_graph",
    "cayley",
    "CayleySpec",
    "circulant",
    "classify_diameter_three_bipartite",
    "classify_diameter_two",
    "complement",
    "complete",
    "complete_bipartite",
    "connected_components",
    "cycle",
    "cyclic_group",
    "degree_sequence",
    "diameter",
    "DiamThreeCase",
    "DiamTwoKind",
    "dihedral_group",
    "direct_product",
    "disjoint_union",
    "distance_shell",
    "DistanceMatrix",
    "from_spec",
    "gp",
    "gp2_mixed_distance",
    "gp2_predicted_profile",
    "gp_balance_profile",
    "GPParams",
    "Graph",
    "GroupTable",
    "hypercube",
    "induced_subgraph",
    "is_distance_degree_regular",
    "is_l_distance_balanced",
    "is_regular",
    "join",
    "join_factorization",
    "PairBalance",
    "path",
    "permutation_group_closure",
    "UNREACHABLE",
    "w_partition",
    "__version__",
]
