import math
from itertools import combinations
from typing import Iterable, List, Optional, Set, Tuple, FrozenSet
from networkx.utils import UnionFind
from signedflow.context import ctx
from signedflow.core import SignedGraph
from signedflow.decorators import cached_analysis
from .cycles import z2_cycle_space_basis
from signedflow.types import VertexId, EdgeId

INFINITE = math.inf

CyclicCut = Tuple[EdgeId, ...]


def _cyclic_component_count(graph: SignedGraph, removed: Iterable[EdgeId] = ()) -> int:
    """Components of G - removed whose edge count reaches their vertex count."""
    removed = set(removed)
    uf = UnionFind(graph.vertices)
    for idx, edge in enumerate(graph.edges):
        if idx not in removed:
            uf.union(edge.end1, edge.end2)
    vertex_count: dict = {}
    edge_count: dict = {}
    for v in graph.vertices:
        root = uf[v]
        vertex_count[root] = vertex_count.get(root, 0) + 1
    for idx, edge in enumerate(graph.edges):
        if idx not in removed:
            root = uf[edge.end1]
            edge_count[root] = edge_count.get(root, 0) + 1
    return sum(1 for root, count in vertex_count.items() if edge_count.get(root, 0) >= count)


def _induced_has_cycle(graph: SignedGraph, vertices: Set[VertexId]) -> bool:
    uf = UnionFind(vertices)
    for edge in graph.edges:
        if edge.end1 in vertices and edge.end2 in vertices:
            if uf[edge.end1] == uf[edge.end2]:
                return True
            uf.union(edge.end1, edge.end2)
    return False


def _fundamental_cycles(graph: SignedGraph, root_order: List[VertexId]) -> List[FrozenSet[VertexId]]:
    """Vertex sets of the fundamental cycles of BFS forests grown from each root."""
    cycles = []
    for root in root_order:
        for mask in z2_cycle_space_basis(graph, root=root):
            vertices = set()
            for idx, edge in enumerate(graph.edges):
                if mask >> idx & 1:
                    vertices.add(edge.end1)
                    vertices.add(edge.end2)
            cycles.append(frozenset(vertices))
    return cycles


def _greedy_upper_bound(graph: SignedGraph) -> Optional[int]:
    """
    Size of δ(V(C)) for a cycle C whose complement still holds a cycle, minimised
    over fundamental cycles. None means no such pair was found, which does not
    prove that two disjoint cycles are absent.
    """
    best: Optional[int] = None
    seen: Set[FrozenSet[VertexId]] = set()
    everything = set(graph.vertices)
    for cycle in _fundamental_cycles(graph, list(graph.vertices)):
        if cycle in seen:
            continue
        seen.add(cycle)
        if not _induced_has_cycle(graph, everything - cycle):
            continue
        cut = sum(1 for e in graph.edges if (e.end1 in cycle) != (e.end2 in cycle))
        if best is None or cut < best:
            best = cut
    return best


def _edge_subset_cut(graph: SignedGraph, limit: int) -> Optional[CyclicCut]:
    for size in range(0, limit + 1):
        for cut in combinations(range(graph.m), size):
            if _cyclic_component_count(graph, cut) >= 2:
                return cut
    return None


def _bipartition_cut(graph: SignedGraph) -> Optional[CyclicCut]:
    """
    Every minimum cyclic cut is δ(S) for a vertex set S such that both S and
    its complement induce a cycle, so trying each S that holds the first vertex
    finds the same cut as the edge subset search.
    """
    if graph.n < 2:
        return None
    first, *rest = graph.vertices
    best: Optional[CyclicCut] = None
    for mask in range(2 ** len(rest) - 1):
        side = {first} | {v for i, v in enumerate(rest) if mask >> i & 1}
        other = set(rest) - side
        if not _induced_has_cycle(graph, side) or not _induced_has_cycle(graph, other):
            continue
        cut = tuple(idx for idx, e in enumerate(graph.edges) if (e.end1 in side) != (e.end2 in side))
        if best is None or (len(cut), cut) < (len(best), best):
            best = cut
    return best


def minimum_cyclic_cut(graph: SignedGraph) -> Optional[CyclicCut]:
    """
    The lexicographically smallest edge set of minimum size whose removal leaves
    at least two components containing a cycle, or None if there is none.
    Signs are ignored. Edge subsets up to the greedy bound are searched, unless
    walking the vertex bipartitions is cheaper.
    """
    upper = _greedy_upper_bound(graph)
    limit = graph.m if upper is None else upper
    subsets = sum(math.comb(graph.m, size) for size in range(limit + 1))
    bipartitions = 2 ** max(graph.n - 1, 0)
    ctx.log.debug(
        "cyclic cut search: upper bound %s, %d edge subsets against %d bipartitions",
        upper, subsets, bipartitions,
    )
    if bipartitions < subsets:
        return _bipartition_cut(graph)
    return _edge_subset_cut(graph, limit)


def _connectivity_key(graph: SignedGraph) -> str:
    return graph.underlying_key()


@cached_analysis(_connectivity_key)
def cyclic_edge_connectivity(graph: SignedGraph) -> int | float:
    """
    Minimum size of a cyclic edge cut. Graphs without two vertex-disjoint cycles
    have no cyclic cut at all; for them the cycle rank m - n + c is returned when
    it is positive (so K4 gives 3 and K3,3 gives 4), and INFINITE for forests.
    """
    cut = minimum_cyclic_cut(graph)
    if cut is not None:
        return len(cut)
    rank = graph.m - graph.n + len(graph.components())
    if rank > 0:
        return rank
    return INFINITE
