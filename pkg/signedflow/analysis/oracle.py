from typing import Optional, Tuple
from signedflow.context import ctx
from signedflow.core import SignedGraph, Orientation, canonical_orientation
from signedflow.errors import SearchLimitExceeded
from signedflow.types import EdgeValuation
from .search import BoundarySearch


def k_flow_domain(k: int) -> Tuple[int, ...]:
    values = []
    for x in range(1, k):
        values.extend((x, -x))
    return tuple(values)


def brute_force_k_flow(graph: SignedGraph, k: int) -> Optional[Tuple[Orientation, EdgeValuation]]:
    """
    Exhaustive search for a nowhere-zero k-flow under the canonical orientation.
    None certifies that no such flow exists (in any orientation, since edge
    reversal maps k-flows to k-flows).
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    limit = ctx.limits["brute_force_max_edges"]
    if graph.m > limit:
        raise SearchLimitExceeded(
            f"brute force flow search is limited to {limit} edges, graph has {graph.m}"
        )
    tau = canonical_orientation(graph)
    domain = k_flow_domain(k)
    search = BoundarySearch(graph, tau, [domain] * graph.m)
    values = search.first()
    if values is None:
        return None
    return tau, values
