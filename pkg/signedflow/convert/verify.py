from typing import Sequence
from signedflow.core import SignedGraph, Orientation, boundary
from signedflow.errors import GraphError


def verify_flow(graph: SignedGraph, tau: Orientation, f: Sequence[int], k: int) -> bool:
    """True iff tau is sign-consistent, ∂f ≡ 0 and 0 < |f(e)| < k on every edge."""
    try:
        partial = boundary(graph, tau, f)
    except GraphError:
        return False
    if any(x != 0 for x in partial.values()):
        return False
    return all(0 < abs(x) < k for x in f)
