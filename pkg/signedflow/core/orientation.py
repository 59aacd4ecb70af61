import enum
from dataclasses import dataclass
from typing import Tuple, Optional, Iterable, Sequence
from signedflow.errors import GraphError, OrientationError
from signedflow.types import VertexId, EdgeId, EdgeValuation, VertexValuation
from .graph import SignedGraph, Sign, Edge


class Direction(str, enum.Enum):
    AWAY = "a"
    TOWARD = "t"

    def __str__(self) -> str:
        return str(self.value)

    def reversed(self) -> "Direction":
        return Direction.TOWARD if self is Direction.AWAY else Direction.AWAY


class Role(str, enum.Enum):
    SOURCE = "source"
    NEAR_SOURCE = "near-source"
    OTHER = "other"


DirPair = Tuple[Direction, Direction]

AWAY_BOTH: DirPair = (Direction.AWAY, Direction.AWAY)
TOWARD_BOTH: DirPair = (Direction.TOWARD, Direction.TOWARD)
FORWARD: DirPair = (Direction.AWAY, Direction.TOWARD)
BACKWARD: DirPair = (Direction.TOWARD, Direction.AWAY)


def sign_consistent(sign: Sign, pair: DirPair) -> bool:
    if sign is Sign.POSITIVE:
        return pair[0] is not pair[1]
    return pair[0] is pair[1]


@dataclass(frozen=True)
class Orientation:
    """
    Per-edge direction marks (dir at end1, dir at end2). δ⁺(v) and δ⁻(v) are
    never stored, they are derived from the marks on demand.
    """

    dirs: Tuple[DirPair, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "dirs", tuple((Direction(a), Direction(b)) for a, b in self.dirs)
        )

    def __len__(self) -> int:
        return len(self.dirs)

    def __getitem__(self, e: EdgeId) -> DirPair:
        return self.dirs[e]

    def at(self, e: EdgeId, end: int) -> Direction:
        return self.dirs[e][end]

    def replace(self, e: EdgeId, pair: DirPair) -> "Orientation":
        dirs = list(self.dirs)
        dirs[e] = pair
        return Orientation(tuple(dirs))

    def check(self, graph: SignedGraph) -> None:
        if len(self.dirs) != graph.m:
            raise GraphError(
                f"orientation covers {len(self.dirs)} edges, graph has {graph.m}"
            )
        for idx, (edge, pair) in enumerate(zip(graph.edges, self.dirs)):
            if not sign_consistent(edge.sign, pair):
                raise OrientationError(
                    f"edge {idx} ({edge.sign}) has sign-inconsistent directions {pair[0]}{pair[1]}"
                )

    def in_degree(self, graph: SignedGraph, v: VertexId) -> int:
        return sum(1 for m in graph.incident(v) if self.dirs[m.edge][m.end] is Direction.TOWARD)

    def out_degree(self, graph: SignedGraph, v: VertexId) -> int:
        return sum(1 for m in graph.incident(v) if self.dirs[m.edge][m.end] is Direction.AWAY)

    def __str__(self) -> str:
        return " ".join(f"{a}{b}" for a, b in self.dirs)


def canonical_orientation(graph: SignedGraph) -> Orientation:
    """Positive edges point from end1 to end2, negative edges away from both ends."""
    return Orientation(tuple(
        AWAY_BOTH if edge.is_negative else FORWARD for edge in graph.edges
    ))


def _check_valuation(graph: SignedGraph, values: Sequence[int]) -> None:
    if len(values) != graph.m:
        raise GraphError(f"valuation covers {len(values)} edges, graph has {graph.m}")


def boundary(graph: SignedGraph, tau: Orientation, f: Sequence[int]) -> VertexValuation:
    """
    ∂f(v) = Σ f(e) over δ⁺(v) − Σ f(e) over δ⁻(v). A loop is visited once per
    end, so a positive loop cancels itself and a negative loop counts twice.
    """
    tau.check(graph)
    _check_valuation(graph, f)
    result: VertexValuation = {}
    for v in graph.vertices:
        total = 0
        for m in graph.incident(v):
            if tau.dirs[m.edge][m.end] is Direction.AWAY:
                total += f[m.edge]
            else:
                total -= f[m.edge]
        result[v] = total
    return result


def is_flow(graph: SignedGraph, tau: Orientation, f: Sequence[int]) -> bool:
    return all(x == 0 for x in boundary(graph, tau, f).values())


def reverse_edge(
    graph: SignedGraph,
    tau: Orientation,
    e: EdgeId,
    f: Optional[Sequence[int]] = None,
) -> Tuple[Orientation, Optional[EdgeValuation]]:
    edge = graph.edge(e)
    if edge.is_loop and edge.sign is Sign.POSITIVE:
        # a positive loop has one end in δ⁺ and one in δ⁻ either way
        return tau, None if f is None else tuple(f)
    a, b = tau[e]
    tau = tau.replace(e, (a.reversed(), b.reversed()))
    if f is None:
        return tau, None
    values = list(f)
    values[e] = -values[e]
    return tau, tuple(values)


def switch_vertex(
    graph: SignedGraph,
    tau: Orientation,
    v: VertexId,
) -> Tuple[SignedGraph, Orientation]:
    graph.check_vertex(v)
    if len(tau) != graph.m:
        raise GraphError(f"orientation covers {len(tau)} edges, graph has {graph.m}")
    edges = list(graph.edges)
    dirs = list(tau.dirs)
    for idx, edge in enumerate(graph.edges):
        if edge.is_loop:
            if edge.end1 == v and edge.is_negative:
                dirs[idx] = (dirs[idx][0].reversed(), dirs[idx][1].reversed())
            continue
        if edge.end1 == v:
            dirs[idx] = (dirs[idx][0].reversed(), dirs[idx][1])
        elif edge.end2 == v:
            dirs[idx] = (dirs[idx][0], dirs[idx][1].reversed())
        else:
            continue
        edges[idx] = Edge(edge.end1, edge.end2, edge.sign.flipped())
    return SignedGraph(graph.vertices, tuple(edges)), Orientation(tuple(dirs))


def switch_vertices(
    graph: SignedGraph,
    tau: Orientation,
    vertices: Iterable[VertexId],
) -> Tuple[SignedGraph, Orientation]:
    for v in vertices:
        graph, tau = switch_vertex(graph, tau, v)
    return graph, tau


def vertex_role(graph: SignedGraph, tau: Orientation, v: VertexId) -> Role:
    indeg = tau.in_degree(graph, v)
    if indeg == 0:
        return Role.SOURCE
    if indeg == 1:
        return Role.NEAR_SOURCE
    return Role.OTHER
