from .graph import SignedGraph, Edge, Sign, Member
from .orientation import (
    Direction,
    Role,
    DirPair,
    Orientation,
    AWAY_BOTH,
    TOWARD_BOTH,
    FORWARD,
    BACKWARD,
    sign_consistent,
    canonical_orientation,
    boundary,
    is_flow,
    reverse_edge,
    switch_vertex,
    switch_vertices,
    vertex_role,
)
from .contraction import ContractionRecord, contract_positive_edge, expand_contraction
