from typing import Dict, List, Optional, Sequence, Tuple
from signedflow.context import ctx
from signedflow.core import SignedGraph, Orientation, Direction
from signedflow.types import EdgeId, EdgeValuation, VertexId


class BoundarySearch:
    """
    Depth-first search for an edge valuation with zero boundary at every vertex.

    Edges are assigned in an order that closes vertices early (sorted by the
    later of their two ends in vertex order). Each edge draws its value from its
    own domain, tried in the given order. After every assignment both endpoints
    are checked: in integer mode the partial boundary must stay within what the
    still unassigned edges can cancel, in modular mode a closed vertex must sum
    to zero modulo the modulus. The first solution found is returned, so the
    result is deterministic.
    """

    graph: SignedGraph
    modulus: Optional[int]
    domains: Sequence[Sequence[int]]
    nodes: int

    _order: List[EdgeId]
    _coef: List[Dict[VertexId, int]]
    _partial: Dict[VertexId, int]
    _capacity: Dict[VertexId, int]
    _values: List[int]

    def __init__(
        self,
        graph: SignedGraph,
        tau: Orientation,
        domains: Sequence[Sequence[int]],
        modulus: Optional[int] = None,
    ) -> None:
        tau.check(graph)
        if len(domains) != graph.m:
            raise ValueError("one domain per edge is required")
        self.graph = graph
        self.modulus = modulus
        self.domains = domains
        self.nodes = 0

        self._coef = []
        for idx, edge in enumerate(graph.edges):
            coef: Dict[VertexId, int] = {}
            for end in (0, 1):
                v = edge.end(end)
                step = 1 if tau.at(idx, end) is Direction.AWAY else -1
                coef[v] = coef.get(v, 0) + step
            self._coef.append({v: c for v, c in coef.items() if c != 0})

        position = {v: i for i, v in enumerate(graph.vertices)}

        def order_key(e: EdgeId) -> Tuple[int, int, int]:
            a, b = position[graph.edges[e].end1], position[graph.edges[e].end2]
            return max(a, b), min(a, b), e

        self._order = sorted(range(graph.m), key=order_key)
        self._partial = {v: 0 for v in graph.vertices}
        self._capacity = {v: 0 for v in graph.vertices}
        for idx, coef in enumerate(self._coef):
            widest = max((abs(x) for x in domains[idx]), default=0)
            for v, c in coef.items():
                self._capacity[v] += abs(c) * widest
        self._values = [0] * graph.m

    def _feasible(self, v: VertexId) -> bool:
        partial = self._partial[v]
        if self.modulus is None:
            return abs(partial) <= self._capacity[v]
        if self._capacity[v] == 0:
            return partial % self.modulus == 0
        return True

    def _descend(self, depth: int) -> bool:
        if depth == len(self._order):
            return True
        e = self._order[depth]
        coef = self._coef[e]
        widest = max((abs(x) for x in self.domains[e]), default=0)
        for v, c in coef.items():
            self._capacity[v] -= abs(c) * widest
        for value in self.domains[e]:
            self.nodes += 1
            for v, c in coef.items():
                self._partial[v] += c * value
            if all(self._feasible(v) for v in coef) and self._descend(depth + 1):
                self._values[e] = value
                return True
            for v, c in coef.items():
                self._partial[v] -= c * value
        for v, c in coef.items():
            self._capacity[v] += abs(c) * widest
        return False

    def first(self) -> Optional[EdgeValuation]:
        # vertices without any nonzero coefficient are trivially balanced
        if not all(self._feasible(v) for v in self.graph.vertices if self._capacity[v] == 0):
            return None
        found = self._descend(0)
        ctx.log.debug("boundary search visited %d nodes, found=%s", self.nodes, found)
        if not found:
            return None
        return tuple(self._values)
