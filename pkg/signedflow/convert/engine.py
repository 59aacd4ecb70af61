from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple
from signedflow.analysis import perfect_matching
from signedflow.context import ctx
from signedflow.core import (
    SignedGraph,
    Orientation,
    Direction,
    Role,
    ContractionRecord,
    AWAY_BOTH,
    TOWARD_BOTH,
    FORWARD,
    BACKWARD,
    boundary,
    reverse_edge,
    vertex_role,
    contract_positive_edge,
    expand_contraction,
)
from signedflow.decorators import timed
from signedflow.errors import InvariantBreach, PreconditionError
from signedflow.types import EdgeId, EdgeValuation
from signedflow.util import dump_state
from signedflow.z6 import role_violation

VALUE_RANGE = range(1, 6)


@dataclass
class ConversionState:
    """
    Mutable working state of the Z6-to-6-flow conversion. While flips and
    contractions run, every vertex is a source with boundary 6 or a near-source
    with boundary 0, values stay in 1..5, minimum degree is at least 3 and the
    number of sources is even.
    """
    graph: SignedGraph
    tau: Orientation
    values: List[int]
    stack: List[ContractionRecord] = field(default_factory=list)
    flips: int = 0

    def dump(self) -> str:
        return dump_state(self.graph, self.tau, self.values)

    def breach(self, detail: str) -> InvariantBreach:
        ctx.log.error("invariant breach: %s", detail)
        return InvariantBreach(detail, self.dump())

    def sources(self) -> int:
        return sum(
            1 for v in self.graph.vertices
            if vertex_role(self.graph, self.tau, v) is Role.SOURCE
        )

    def violation(self) -> Optional[str]:
        if any(x not in VALUE_RANGE for x in self.values):
            return "value outside 1..5"
        if any(self.graph.degree(v) < 3 for v in self.graph.vertices):
            return "vertex of degree below 3"
        violation = role_violation(self.graph, self.tau, self.values)
        if violation:
            return violation
        if self.sources() % 2:
            return "odd number of sources"
        return None

    def check(self) -> None:
        if not ctx.engine["check_invariants"]:
            return
        violation = self.violation()
        if violation:
            raise self.breach(violation)

    def flippable_edge(self) -> Optional[EdgeId]:
        for idx, edge in enumerate(self.graph.edges):
            if edge.is_negative and not edge.is_loop and self.tau[idx] == TOWARD_BOTH:
                return idx
        return None

    def positive_edge(self) -> Optional[EdgeId]:
        for idx, edge in enumerate(self.graph.edges):
            if not edge.is_negative:
                return idx
        return None

    def flip(self, e: EdgeId) -> None:
        self.tau, _ = reverse_edge(self.graph, self.tau, e)
        self.values[e] = 6 - self.values[e]
        self.flips += 1
        ctx.log.debug("flipped negative edge %d, value now %d", e, self.values[e])

    def contract(self, e: EdgeId) -> None:
        edge = self.graph.edges[e]
        if edge.is_loop:
            raise self.breach(f"positive loop {e} reached the contraction phase")
        tail, head = (edge.end1, edge.end2) if self.tau[e] == FORWARD else (edge.end2, edge.end1)
        if boundary(self.graph, self.tau, self.values)[head] != 0 or \
                vertex_role(self.graph, self.tau, head) is not Role.NEAR_SOURCE:
            raise self.breach(f"head {head} of positive edge {e} is not a 0-near-source")
        self.graph, self.tau, values, record = contract_positive_edge(
            self.graph, self.tau, self.values, e
        )
        self.values = list(values)
        self.stack.append(record)
        ctx.log.debug("contracted positive edge %d (%d -> %d)", e, tail, head)


def _satisfies_conclusion(graph: SignedGraph, tau: Orientation, values: Sequence[int]) -> bool:
    if any(x not in VALUE_RANGE for x in values):
        return False
    partial = boundary(graph, tau, values)
    return all(
        partial[v] == 0 and vertex_role(graph, tau, v) is Role.NEAR_SOURCE
        for v in graph.vertices
    )


def _base_case(state: ConversionState) -> None:
    for idx, edge in enumerate(state.graph.edges):
        if not edge.is_negative or state.tau[idx] != AWAY_BOTH:
            raise state.breach(f"edge {idx} is not a negative edge directed away from its ends")
    partial = boundary(state.graph, state.tau, state.values)
    for v in state.graph.vertices:
        if partial[v] != 6:
            raise state.breach(f"source {v} has boundary {partial[v]} in the base case")
    if state.graph.n % 2:
        raise state.breach(f"odd number of sources ({state.graph.n}) in the base case")
    matching = perfect_matching(state.graph)
    if matching is None:
        raise state.breach("contracted graph has no perfect matching")
    for e in sorted(matching.edges):
        state.flip(e)
    ctx.log.debug("base case flipped a perfect matching of %d edges", len(matching.edges))


def _unwind(state: ConversionState) -> None:
    while state.stack:
        record = state.stack.pop()
        graph, tau, values = expand_contraction(state.graph, state.tau, state.values, record)
        e = record.edge
        values = list(values)
        values[e] = 0
        partial = boundary(graph, tau, values)

        def in_degree(x: int) -> int:
            return sum(
                1 for m in graph.incident(x)
                if m.edge != e and tau.at(m.edge, m.end) is Direction.TOWARD
            )

        degrees = (in_degree(record.u), in_degree(record.v))
        if degrees == (1, 0):
            near, source, pair = record.u, record.v, FORWARD
        elif degrees == (0, 1):
            near, source, pair = record.v, record.u, BACKWARD
        else:
            state.graph, state.tau, state.values = graph, tau, values
            raise state.breach(
                f"split of {record.merged} gives in-degrees {degrees} at ({record.u}, {record.v})"
            )
        s = partial[source]
        if s not in VALUE_RANGE or partial[near] != -s:
            state.graph, state.tau, state.values = graph, tau, values
            raise state.breach(f"restored edge {e} would need value {s}")
        state.graph = graph
        state.tau = tau.replace(e, pair)
        values[e] = s
        state.values = values
        ctx.log.debug("restored edge %d from %d to %d with value %d", e, near, source, s)


@timed
def z6_to_six_flow(
    graph: SignedGraph,
    tau: Orientation,
    phi: Sequence[int],
) -> Tuple[Orientation, EdgeValuation]:
    """
    Turns a valuation in which every vertex is a 6-source or a 0-near-source
    (values in 1..5, an even number of sources, minimum degree 3) into an
    orientation where every vertex is a near-source together with a
    nowhere-zero 6-flow with values in 1..5.

    Negative edges directed toward both ends are flipped, positive edges are
    contracted (flips are re-checked after each contraction), the remaining
    all-source graph is resolved by flipping a perfect matching, and the
    contractions are then undone one by one.
    """
    tau.check(graph)
    if len(phi) != graph.m:
        raise PreconditionError("valuation does not cover the graph")
    if _satisfies_conclusion(graph, tau, phi):
        return tau, tuple(phi)

    state = ConversionState(graph=graph, tau=tau, values=list(phi))
    violation = state.violation()
    if violation:
        raise PreconditionError(f"conversion hypotheses fail: {violation}")

    while True:
        e = state.flippable_edge()
        if e is not None:
            state.flip(e)
            state.check()
            continue
        e = state.positive_edge()
        if e is None:
            break
        state.contract(e)
        state.check()

    ctx.log.debug(
        "conversion reached the base case after %d flips and %d contractions on %d vertices",
        state.flips, len(state.stack), state.graph.n,
    )
    _base_case(state)
    _unwind(state)

    if not _satisfies_conclusion(state.graph, state.tau, state.values):
        raise state.breach("unwound valuation is not a near-source 6-flow")
    return state.tau, tuple(state.values)
