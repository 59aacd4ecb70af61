import networkx as nx
from typing import Dict, List, Optional
from signedflow.core import SignedGraph
from signedflow.types import VertexId


def z2_cycle_space_basis(graph: SignedGraph, root: Optional[VertexId] = None) -> List[int]:
    """
    Fundamental-cycle basis of the Z2 cycle space of the underlying multigraph.
    Every basis vector is an int bitmask over edge ids; there is one per
    non-tree edge of a BFS forest, ordered by that edge's id. A loop is a
    cycle on its own and a pair of parallel edges forms a 2-cycle.
    """
    nxg = graph.to_networkx()
    roots = list(graph.vertices)
    if root is not None:
        graph.check_vertex(root)
        roots.remove(root)
        roots.insert(0, root)

    path: Dict[VertexId, int] = {}
    tree = 0
    for start in roots:
        if start in path:
            continue
        path[start] = 0
        for u, v in nx.bfs_edges(nxg, start):
            key = min(nxg[u][v])
            tree |= 1 << key
            path[v] = path[u] ^ (1 << key)

    basis = []
    for idx, edge in enumerate(graph.edges):
        if tree >> idx & 1:
            continue
        basis.append((1 << idx) ^ path[edge.end1] ^ path[edge.end2])
    return basis


def cycle_space_dimension(graph: SignedGraph) -> int:
    return graph.m - graph.n + len(graph.components())
