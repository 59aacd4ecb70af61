from typing import Dict, List, Sequence, Tuple
from signedflow.context import ctx
from signedflow.core import (
    SignedGraph,
    Orientation,
    Direction,
    DirPair,
    Edge,
    FORWARD,
    Sign,
    boundary,
)
from signedflow.decorators import timed
from signedflow.errors import LiftError, GraphError
from signedflow.types import EdgeId, EdgeValuation, VertexId
from .recipe import LiftRecipe, SuppressStep, UncontractStep, DropLoopStep, SwitchStep


class _Replay:

    def __init__(self, recipe: LiftRecipe, tau: Orientation, f: Sequence[int]):
        reduced = recipe.reduced_graph
        if len(recipe.edge_ids) != reduced.m:
            raise LiftError("recipe edge ids do not cover the reduced graph")
        try:
            tau.check(reduced)
        except GraphError as e:
            raise LiftError(f"orientation does not fit the reduced graph: {e.detail}")
        if len(f) != reduced.m:
            raise LiftError(f"valuation covers {len(f)} edges, reduced graph has {reduced.m}")
        self.vertices: List[VertexId] = list(reduced.vertices)
        self.edges: Dict[EdgeId, Edge] = dict(zip(recipe.edge_ids, reduced.edges))
        self.dirs: Dict[EdgeId, List[Direction]] = {
            eid: list(tau[pos]) for pos, eid in enumerate(recipe.edge_ids)
        }
        self.values: Dict[EdgeId, int] = {eid: f[pos] for pos, eid in enumerate(recipe.edge_ids)}

    def _expect(self, eid: EdgeId, edge: Edge) -> None:
        if self.edges.get(eid) != edge:
            raise LiftError(f"recipe expects edge {eid} to be {edge}, found {self.edges.get(eid)}")

    def _drop(self, eid: EdgeId) -> None:
        del self.edges[eid], self.dirs[eid], self.values[eid]

    def unsuppress(self, step: SuppressStep) -> None:
        mid, merged = step.merged
        self._expect(mid, merged)
        outer = self.dirs[mid]
        value = self.values[mid]
        self._drop(mid)

        for (eid, edge), direction in zip(step.removed, outer):
            inner_end = 0 if edge.end1 == step.vertex else 1
            dirs = [direction, direction]
            if edge.sign is Sign.POSITIVE:
                dirs[inner_end] = direction.reversed()
            self.edges[eid] = edge
            self.dirs[eid] = dirs
            self.values[eid] = value
        self.vertices.append(step.vertex)

    def split_back(self, step: UncontractStep) -> None:
        lid, link = step.link
        if step.kept:
            self._expect(lid, link)
            balance = self._boundary_without(step.new_vertex, lid)
            if abs(balance) != abs(self.values[lid]):
                raise LiftError(
                    f"link {lid} carries {self.values[lid]}, balancing value is {abs(balance)}"
                )
            self._drop(lid)
        elif lid in self.edges:
            raise LiftError(f"deleted link {lid} is present in the reduced graph")

        if step.new_vertex not in self.vertices:
            raise LiftError(f"vertex {step.new_vertex} is missing from the reduced graph")
        for eid, end in step.moved:
            edge = self.edges.get(eid)
            if edge is None or edge.end(end) != step.new_vertex:
                raise LiftError(f"edge {eid} end {end} is not at vertex {step.new_vertex}")
            self.edges[eid] = edge.with_end(end, step.vertex)
        self.vertices.remove(step.new_vertex)

    def restore_loop(self, step: DropLoopStep) -> None:
        eid, loop = step.loop
        if eid in self.edges:
            raise LiftError(f"dropped loop {eid} is present in the reduced graph")
        if step.isolated:
            if step.vertex in self.vertices:
                raise LiftError(f"vertex {step.vertex} was dropped but is present")
            self.vertices.append(step.vertex)
        elif step.vertex not in self.vertices:
            raise LiftError(f"vertex {step.vertex} is missing from the reduced graph")
        self.edges[eid] = loop
        self.dirs[eid] = list(FORWARD)
        self.values[eid] = 1

    def switch(self, step: SwitchStep) -> None:
        v = step.vertex
        if v not in self.vertices:
            raise LiftError(f"cannot switch unknown vertex {v}")
        for eid, edge in self.edges.items():
            dirs = self.dirs[eid]
            if edge.is_loop:
                if edge.end1 == v and edge.is_negative:
                    self.dirs[eid] = [dirs[0].reversed(), dirs[1].reversed()]
                continue
            if v not in (edge.end1, edge.end2):
                continue
            end = 0 if edge.end1 == v else 1
            dirs[end] = dirs[end].reversed()
            self.edges[eid] = edge._replace(sign=edge.sign.flipped())

    def _boundary_without(self, v: VertexId, skip: EdgeId) -> int:
        total = 0
        for eid, edge in self.edges.items():
            if eid == skip:
                continue
            for end in (0, 1):
                if edge.end(end) == v:
                    x = self.values[eid]
                    total += x if self.dirs[eid][end] is Direction.AWAY else -x
        return total

    def result(self, original: SignedGraph) -> Tuple[Orientation, EdgeValuation]:
        if set(self.edges) != set(range(original.m)) or set(self.vertices) != set(original.vertices):
            raise LiftError("recipe does not lead back to the original graph")
        for eid, edge in enumerate(original.edges):
            if self.edges[eid] != edge:
                raise LiftError(f"edge {eid} replays as {self.edges[eid]}, original is {edge}")
        dirs: List[DirPair] = [(self.dirs[e][0], self.dirs[e][1]) for e in range(original.m)]
        return Orientation(tuple(dirs)), tuple(self.values[e] for e in range(original.m))


@timed
def lift_flow(
    recipe: LiftRecipe,
    original: SignedGraph,
    tau: Orientation,
    f: Sequence[int],
) -> Tuple[Orientation, EdgeValuation]:
    """
    Replays the recipe backwards, carrying a nowhere-zero flow of the reduced
    graph to the original graph. Suppressed edges get the merged edge's value
    on both halves, kept links are dropped after their value is checked against
    the boundary they balance, deleted links simply vanish. Dropped positive
    loops come back carrying 1 in a consistent direction.
    """
    if recipe.is_empty:
        if recipe.reduced_graph != original:
            raise LiftError("empty recipe but the graphs differ")
        return tau, tuple(f)

    replay = _Replay(recipe, tau, f)
    for step in reversed(recipe.steps):
        if isinstance(step, SuppressStep):
            replay.unsuppress(step)
        elif isinstance(step, UncontractStep):
            replay.split_back(step)
        elif isinstance(step, DropLoopStep):
            replay.restore_loop(step)
        else:
            replay.switch(step)
    lifted_tau, lifted = replay.result(original)

    if any(x == 0 for x in lifted) or any(boundary(original, lifted_tau, lifted).values()):
        ctx.log.error("lifted valuation is not a nowhere-zero flow")
        raise LiftError("lifted valuation is not a nowhere-zero flow")
    ctx.log.debug("lifted a flow across %d steps", len(recipe.steps))
    return lifted_tau, lifted
