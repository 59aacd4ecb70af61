import copy
from itertools import combinations
from typing import Dict, List, Optional, Tuple
from signedflow.analysis import is_flow_admissible
from signedflow.context import ctx
from signedflow.core import SignedGraph, Edge, Member, Sign
from signedflow.decorators import timed
from signedflow.errors import ReductionError, NotFlowAdmissible
from signedflow.types import VertexId, EdgeId
from .recipe import LiftRecipe, SuppressStep, UncontractStep, DropLoopStep, Step


class Workbench:
    """
    Mutable graph keyed by stable internal edge ids. Edges of the input keep
    their positions as ids, new edges and vertices get fresh ids, so every
    step can be logged in terms that survive later steps.
    """

    def __init__(self, graph: SignedGraph):
        self.vertices: List[VertexId] = list(graph.vertices)
        self.edges: Dict[EdgeId, Edge] = dict(enumerate(graph.edges))
        self.steps: List[Step] = []
        self._next_edge = graph.m
        self._next_vertex = max(graph.vertices, default=-1) + 1

    def members(self, v: VertexId) -> List[Member]:
        result = []
        for eid in sorted(self.edges):
            edge = self.edges[eid]
            if edge.end1 == v:
                result.append(Member(eid, 0))
            if edge.end2 == v:
                result.append(Member(eid, 1))
        return result

    def degree(self, v: VertexId) -> int:
        return len(self.members(v))

    def graph(self, without: Optional[EdgeId] = None) -> SignedGraph:
        return SignedGraph(
            tuple(self.vertices),
            tuple(self.edges[eid] for eid in sorted(self.edges) if eid != without),
        )

    def recipe(self) -> LiftRecipe:
        ids = tuple(sorted(self.edges))
        return LiftRecipe(
            steps=list(self.steps),
            reduced_vertices=tuple(self.vertices),
            reduced_edges=tuple(self.edges[eid] for eid in ids),
            edge_ids=ids,
        )

    def clone(self) -> "Workbench":
        other = copy.copy(self)
        other.vertices = list(self.vertices)
        other.edges = dict(self.edges)
        other.steps = list(self.steps)
        return other

    def suppress(self, v: VertexId) -> EdgeId:
        members = self.members(v)
        if len(members) != 2:
            raise ReductionError(f"vertex {v} has degree {len(members)}, not 2")
        (ia, end_a), (ib, end_b) = members
        if ia == ib:
            raise ReductionError(f"degree-2 vertex {v} carries a loop")
        a, b = self.edges[ia], self.edges[ib]
        merged = Edge(a.end(1 - end_a), b.end(1 - end_b), a.sign * b.sign)
        mid = self._next_edge
        self._next_edge += 1

        del self.edges[ia], self.edges[ib]
        self.edges[mid] = merged
        self.vertices.remove(v)
        self.steps.append(SuppressStep(vertex=v, removed=((ia, a), (ib, b)), merged=(mid, merged)))
        ctx.log.debug("suppressed vertex %d, edges %d and %d merged into %d", v, ia, ib, mid)
        return mid

    def _suppressible(self, v: VertexId) -> bool:
        members = self.members(v)
        return len(members) == 2 and members[0].edge != members[1].edge

    def suppress_all(self) -> int:
        """Suppresses degree-2 vertices lowest first. A vertex whose only edge is a loop stays."""
        count = 0
        while True:
            v = next((x for x in sorted(self.vertices) if self._suppressible(x)), None)
            if v is None:
                return count
            self.suppress(v)
            count += 1

    def drop_positive_loops(self) -> int:
        count = 0
        for eid in sorted(self.edges):
            edge = self.edges[eid]
            if not edge.is_loop or edge.is_negative:
                continue
            del self.edges[eid]
            v = edge.end1
            isolated = self.degree(v) == 0
            if isolated:
                self.vertices.remove(v)
            self.steps.append(DropLoopStep(vertex=v, loop=(eid, edge), isolated=isolated))
            ctx.log.debug("dropped positive loop %d at vertex %d", eid, v)
            count += 1
        return count

    def tidy(self) -> int:
        """
        Alternates dropping positive loops and suppressing degree-2 vertices
        until neither applies. Returns the number of loops dropped.
        """
        dropped = 0
        while True:
            dropped += self.drop_positive_loops()
            v = next((x for x in sorted(self.vertices) if self._suppressible(x)), None)
            if v is None:
                return dropped
            self.suppress(v)

    def uncontract(self, v: VertexId, first: Member, second: Member) -> EdgeId:
        degree = self.degree(v)
        if degree < 4:
            raise ReductionError(f"vertex {v} has degree {degree}, uncontraction needs at least 4")
        if first == second:
            raise ReductionError("uncontraction needs two distinct edge-ends")
        for member in (first, second):
            edge = self.edges.get(member.edge)
            if edge is None or edge.end(member.end) != v:
                raise ReductionError(f"edge {member.edge} end {member.end} is not at vertex {v}")

        w = self._next_vertex
        self._next_vertex += 1
        self.vertices.append(w)
        for eid, end in (first, second):
            self.edges[eid] = self.edges[eid].with_end(end, w)
        lid = self._next_edge
        self._next_edge += 1
        self.edges[lid] = Edge(v, w, Sign.POSITIVE)
        return lid

    def _try_split(self, v: VertexId, first: Member, second: Member) -> Optional[Tuple[UncontractStep, int]]:
        w = self._next_vertex
        lid = self.uncontract(v, first, second)
        link = self.edges[lid]

        if is_flow_admissible(self.graph(without=lid)):
            del self.edges[lid]
            kept = False
        elif is_flow_admissible(self.graph()):
            kept = True
        else:
            return None

        step = UncontractStep(
            vertex=v,
            new_vertex=w,
            moved=(tuple(first), tuple(second)),
            link=(lid, link),
            kept=kept,
        )
        self.steps.append(step)
        return step, self.tidy()

    def split(self, v: VertexId) -> UncontractStep:
        """
        Uncontracts v and applies the admissibility branch, then tidies up.
        Member pairs are tried in order, the first one after which no positive
        loop had to be dropped wins, otherwise the first pair that worked at all.
        """
        fallback: Optional[Tuple["Workbench", UncontractStep]] = None
        for first, second in combinations(self.members(v), 2):
            trial = self.clone()
            outcome = trial._try_split(v, first, second)
            if outcome is None:
                continue
            step, dropped = outcome
            if not dropped:
                self._adopt(trial, step)
                return step
            if fallback is None:
                fallback = (trial, step)

        if fallback is None:
            raise ReductionError(f"no admissible uncontraction at vertex {v}")
        trial, step = fallback
        ctx.log.info("every uncontraction at vertex %d leaves positive loops, dropping them", v)
        self._adopt(trial, step)
        return step

    def _adopt(self, trial: "Workbench", step: UncontractStep) -> None:
        self.__dict__.update(vars(trial))
        ctx.log.info(
            "uncontracted vertex %d into %d, link %d %s",
            step.vertex, step.new_vertex, step.link[0], "kept" if step.kept else "deleted",
        )

    def high_degree_vertex(self) -> Optional[VertexId]:
        return next((x for x in sorted(self.vertices) if self.degree(x) >= 4), None)


def _check_no_loop_at_degree_two(graph: SignedGraph) -> None:
    for v in graph.vertices:
        if graph.degree(v) == 2 and any(graph.edges[m.edge].is_loop for m in graph.incident(v)):
            raise ReductionError(f"degree-2 vertex {v} carries a loop")


def suppress_degree_two(graph: SignedGraph) -> Tuple[SignedGraph, LiftRecipe]:
    """
    Suppresses degree-2 vertices, lowest id first, until none is left. A k-flow
    exists on the result iff one exists on the input.
    """
    _check_no_loop_at_degree_two(graph)
    bench = Workbench(graph)
    count = bench.suppress_all()
    _check_no_loop_at_degree_two(bench.graph())
    if count:
        ctx.log.debug("suppressed %d degree-2 vertices", count)
    return bench.graph(), bench.recipe()


def uncontract_vertex(graph: SignedGraph, v: VertexId, e1: EdgeId, e2: EdgeId) -> SignedGraph:
    """
    Moves one end of e1 and one end of e2 from v to a new vertex v' and links
    v and v' with a new positive edge, appended after the existing edges.
    Passing the same loop twice moves both of its ends.
    """
    graph.check_vertex(v)
    members = graph.incident(v)
    first = next((m for m in members if m.edge == e1), None)
    second = next((m for m in members if m.edge == e2 and m != first), None)
    if first is None or second is None:
        raise ReductionError(f"edges {e1} and {e2} are not two distinct edge-ends at vertex {v}")
    bench = Workbench(graph)
    bench.uncontract(v, first, second)
    return bench.graph()


@timed
def reduce_to_cubic(graph: SignedGraph) -> Tuple[SignedGraph, LiftRecipe]:
    """
    Reduces a connected flow-admissible graph to a cubic one. Positive loops
    carry a flow of their own and are dropped, so a graph made of nothing but
    balanced cycles reduces to the empty graph.
    """
    if graph.m == 0 or not graph.is_connected():
        raise ReductionError("reduction needs a connected graph with at least one edge")
    for v in graph.vertices:
        if graph.degree(v) == 1:
            raise NotFlowAdmissible(f"vertex {v} has degree one")
    if not is_flow_admissible(graph):
        raise NotFlowAdmissible("graph is not flow-admissible")

    bench = Workbench(graph)
    bench.tidy()
    while (v := bench.high_degree_vertex()) is not None:
        bench.split(v)

    reduced = bench.graph()
    if not reduced.is_cubic():
        raise ReductionError(f"reduction stopped on a non-cubic graph {reduced!r}")
    ctx.log.info(
        "reduced %d vertices / %d edges to a cubic graph on %d vertices in %d steps",
        graph.n, graph.m, reduced.n, len(bench.steps),
    )
    return reduced, bench.recipe()
