from typing import Optional, Tuple
from signedflow.analysis import BoundarySearch, z2_cycle_space_basis
from signedflow.context import ctx
from signedflow.core import SignedGraph, Orientation, canonical_orientation
from signedflow.decorators import timed
from signedflow.errors import SearchLimitExceeded
from signedflow.types import Z2Z3Valuation
from signedflow.util import popcount

# Z3 values for edges outside supp(φ2) and inside it
REQUIRED_Z3 = (1, 2)
FREE_Z3 = (1, 2, 0)


def _combine(basis: list[int], index: int) -> int:
    mask = 0
    j = 0
    while index:
        if index & 1:
            mask ^= basis[j]
        index >>= 1
        j += 1
    return mask


@timed
def find_z2z3_flow(graph: SignedGraph) -> Optional[Tuple[Orientation, Z2Z3Valuation]]:
    """
    Exhaustive search for a nowhere-zero Z2 x Z3 flow φ2 x φ3 whose Z2 support
    holds an even number of negative edges.

    φ2 ranges over the Z2 cycle space of the underlying multigraph (over Z2
    the boundary ignores signs and directions). Candidates are taken in
    enumeration order, index i selecting the basis vectors of its set bits.
    For each candidate passing the parity filter, a Z3 flow under the
    canonical orientation is searched, nonzero on every edge outside
    supp(φ2). None is a certificate that no such flow exists.
    """
    basis = z2_cycle_space_basis(graph)
    limit = ctx.limits["z2_max_dimension"]
    if len(basis) > limit:
        raise SearchLimitExceeded(
            f"Z2 cycle space has dimension {len(basis)}, the search is limited to {limit}"
        )
    tau = canonical_orientation(graph)
    negative = 0
    for e in graph.negative_edges():
        negative |= 1 << e

    tried = 0
    for index in range(1 << len(basis)):
        support = _combine(basis, index)
        if popcount(support & negative) % 2:
            continue
        tried += 1
        domains = [FREE_Z3 if support >> e & 1 else REQUIRED_Z3 for e in range(graph.m)]
        phi3 = BoundarySearch(graph, tau, domains, modulus=3).first()
        if phi3 is None:
            continue
        ctx.log.debug(
            "Z2xZ3 flow found at candidate %d after %d Z3 searches", index, tried
        )
        return tau, tuple((support >> e & 1, phi3[e] % 3) for e in range(graph.m))

    ctx.log.debug("no Z2xZ3 flow among %d candidates", 1 << len(basis))
    return None
