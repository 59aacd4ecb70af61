from dataclasses import dataclass
from typing import Optional, Sequence, Tuple
from signedflow.context import ctx
from signedflow.core import (
    SignedGraph,
    Orientation,
    Role,
    AWAY_BOTH,
    TOWARD_BOTH,
    boundary,
    reverse_edge,
    switch_vertices,
    vertex_role,
)
from signedflow.errors import NotCubic, HasLoop, PreconditionError, InvariantBreach
from signedflow.types import EdgeValuation, VertexId, Z6Valuation
from signedflow.util import dump_state


@dataclass(frozen=True)
class SourceParity:
    sources: int
    x1: int
    x2: int
    x3: int
    check: bool


@dataclass(frozen=True)
class NormalizedValuation:
    """
    Result of normalize_cubic: values in {1,2,3}, every vertex a source with
    boundary 6 or a near-source with boundary 0, and an even number of sources.
    `graph` carries the signature after the switches in `switched`.
    """
    graph: SignedGraph
    orientation: Orientation
    values: EdgeValuation
    switched: Tuple[VertexId, ...]
    sources: int


def odd_negative_count(graph: SignedGraph, values: Sequence[int]) -> int:
    return sum(1 for e in graph.negative_edges() if values[e] % 2)


def role_violation(graph: SignedGraph, tau: Orientation, values: Sequence[int]) -> Optional[str]:
    """Describes the first vertex that is neither a 6-source nor a 0-near-source."""
    partial = boundary(graph, tau, values)
    for v in graph.vertices:
        role = vertex_role(graph, tau, v)
        if not ((role is Role.SOURCE and partial[v] == 6) or
                (role is Role.NEAR_SOURCE and partial[v] == 0)):
            return f"vertex {v} is {role.value} with boundary {partial[v]}"
    return None


def source_parity(graph: SignedGraph, tau: Orientation, phi: Sequence[int]) -> SourceParity:
    """
    Counts sources two ways. Positive edges contribute nothing to Σ ∂φ(v) and a
    negative edge contributes ±2φ(e), so 6w = 2x1 + 4x2 + 6x3, which rearranges
    to 6w = 2(x1 + x3) + 4x2 + 4x3.
    """
    if any(x not in (1, 2, 3) for x in phi):
        raise PreconditionError("source parity needs values in {1, 2, 3}")
    tau.check(graph)
    violation = role_violation(graph, tau, phi)
    if violation:
        raise PreconditionError(violation)

    w = sum(1 for v in graph.vertices if vertex_role(graph, tau, v) is Role.SOURCE)
    x = {1: 0, 2: 0, 3: 0}
    for e in graph.negative_edges():
        if tau[e] == AWAY_BOTH:
            x[phi[e]] += 1
        elif tau[e] == TOWARD_BOTH:
            x[phi[e]] -= 1
    total = sum(boundary(graph, tau, phi).values())
    check = (
        6 * w == 2 * (x[1] + x[3]) + 4 * x[2] + 4 * x[3]
        and total == 6 * w == 2 * x[1] + 4 * x[2] + 6 * x[3]
        and w % 2 == 0
    )
    return SourceParity(sources=w, x1=x[1], x2=x[2], x3=x[3], check=check)


def normalize_cubic(graph: SignedGraph, tau: Orientation, phi6: Z6Valuation) -> NormalizedValuation:
    if graph.has_loops():
        raise HasLoop("normalization needs a loopless graph")
    if not graph.is_cubic():
        raise NotCubic("normalization needs a cubic graph")
    tau.check(graph)
    if len(phi6) != graph.m or any(x not in range(1, 6) for x in phi6):
        raise PreconditionError("Z6 valuation must be nowhere-zero with values in 1..5")
    if any(x % 6 for x in boundary(graph, tau, phi6).values()):
        raise PreconditionError("Z6 valuation is not a Z6 flow")
    if odd_negative_count(graph, phi6) % 2:
        raise PreconditionError("odd number of negative edges carry an odd Z6 value")

    values = list(phi6)
    for e, x in enumerate(phi6):
        if x in (4, 5):
            tau, _ = reverse_edge(graph, tau, e)
            values[e] = 6 - x
    ctx.log.debug("normalization reversed %d edges", sum(1 for x in phi6 if x in (4, 5)))

    partial = boundary(graph, tau, values)
    for v, x in partial.items():
        if x not in (-6, 0, 6):
            raise InvariantBreach(
                f"vertex {v} has boundary {x} after reversals",
                dump_state(graph, tau, values),
            )

    switched = tuple(v for v in graph.vertices if tau.in_degree(graph, v) >= 2)
    graph, tau = switch_vertices(graph, tau, switched)
    ctx.log.debug("normalization switched at %d vertices", len(switched))

    violation = role_violation(graph, tau, values)
    if violation:
        raise InvariantBreach(violation, dump_state(graph, tau, values))
    parity = source_parity(graph, tau, values)
    if not parity.check:
        raise InvariantBreach(
            f"source parity failed: w={parity.sources} x=({parity.x1}, {parity.x2}, {parity.x3})",
            dump_state(graph, tau, values),
        )
    return NormalizedValuation(
        graph=graph,
        orientation=tau,
        values=tuple(values),
        switched=switched,
        sources=parity.sources,
    )
