import networkx as nx
from typing import Dict, FrozenSet, Optional, Tuple
from pydantic import BaseModel, ConfigDict
from signedflow.core import SignedGraph
from signedflow.types import EdgeId, VertexId


class MatchingResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    edges: FrozenSet[EdgeId]
    perfect: bool


def _simple_underlying(graph: SignedGraph) -> Tuple[nx.Graph, Dict[Tuple[VertexId, VertexId], EdgeId]]:
    """Loopless, deduplicated underlying graph; each pair keeps its lowest edge id."""
    simple = nx.Graph()
    simple.add_nodes_from(graph.vertices)
    representative: Dict[Tuple[VertexId, VertexId], EdgeId] = {}
    for idx, edge in enumerate(graph.edges):
        if edge.is_loop:
            continue
        pair = (min(edge.end1, edge.end2), max(edge.end1, edge.end2))
        if pair not in representative:
            representative[pair] = idx
            simple.add_edge(*pair)
    return simple, representative


def maximum_matching(graph: SignedGraph) -> MatchingResult:
    simple, representative = _simple_underlying(graph)
    # Edmonds' blossom algorithm; unit weights with maxcardinality give a maximum matching
    matched = nx.max_weight_matching(simple, maxcardinality=True)
    edges = frozenset(representative[(min(u, v), max(u, v))] for u, v in matched)
    return MatchingResult(edges=edges, perfect=2 * len(edges) == graph.n)


def perfect_matching(graph: SignedGraph) -> Optional[MatchingResult]:
    if graph.n % 2:
        return None
    result = maximum_matching(graph)
    return result if result.perfect else None


def is_matching(graph: SignedGraph, edges: FrozenSet[EdgeId]) -> bool:
    covered = set()
    for e in edges:
        edge = graph.edge(e)
        if edge.is_loop or edge.end1 in covered or edge.end2 in covered:
            return False
        covered.update((edge.end1, edge.end2))
    return True
