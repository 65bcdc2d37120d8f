"""Distances and geodesics in the graph of perfect matchings of K_2m."""

from .errors import (
    CapExceeded,
    DuplicateVertex,
    EdgeAlreadyPresent,
    MatchgeoError,
    MixedSizes,
    NotNonCrossing,
    ResourceLimit,
    SharedVertex,
    VertexOutOfRange,
    WrongEdgeCount,
)
from .geodesics import (
    GeodesicPath,
    count_cycle_factorizations,
    count_labeled_trees,
    cycle_profile,
    enumerate_geodesics,
    geodesic_count,
    labeled_tree_recurrence,
    p2k_closed,
    p2k_recurrence,
    p2k_weighted,
)
from .matching import (
    AlternatingCycle,
    CycleDecomposition,
    Edge,
    Matching,
    are_adjacent,
    canonicalize,
    enumerate_all_matchings,
    insert_edge,
    insert_sequence,
    neighbors,
    symmetric_difference,
    union_decompose,
)
from .metric import (
    InsertionEffect,
    antipodes_of,
    bfs_distance,
    classify_insertion,
    diameter,
    distance,
    eccentricity,
)
from .noncrossing import (
    boundary_pair,
    edges_cross,
    is_noncrossing,
    mm_distance,
    mm_geodesic_count,
    verify_unique_maximal_pair,
)

__version__ = "0.1.0"
