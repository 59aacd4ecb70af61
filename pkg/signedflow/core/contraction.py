from typing import Tuple, Sequence
from pydantic import BaseModel, ConfigDict
from signedflow.errors import ContractionError, GraphError
from signedflow.types import VertexId, EdgeId, EdgeValuation
from .graph import SignedGraph, Edge, Sign
from .orientation import Orientation, DirPair


class ContractionRecord(BaseModel):
    """
    Everything needed to undo one positive-edge contraction. `moved` lists the
    edge-ends (indices in the contracted graph) that sat at `v` before they were
    identified with `u`; the merged vertex keeps the id of `u`.
    """
    model_config = ConfigDict(frozen=True)

    edge: EdgeId
    record: Edge
    dirs: DirPair
    value: int
    merged: VertexId
    u: VertexId
    v: VertexId
    position: int
    moved: Tuple[Tuple[EdgeId, int], ...]


def contract_positive_edge(
    graph: SignedGraph,
    tau: Orientation,
    f: Sequence[int],
    e: EdgeId,
) -> Tuple[SignedGraph, Orientation, EdgeValuation, ContractionRecord]:
    edge = graph.edge(e)
    if edge.sign is not Sign.POSITIVE:
        raise ContractionError(f"edge {e} is negative and cannot be contracted")
    if edge.is_loop:
        raise ContractionError(f"edge {e} is a loop and cannot be contracted")
    if len(tau) != graph.m or len(f) != graph.m:
        raise GraphError("orientation or valuation does not match the graph")

    u, v = edge.end1, edge.end2
    edges = []
    moved = []
    for idx, other in enumerate(graph.edges):
        if idx == e:
            continue
        new_idx = len(edges)
        if other.end1 == v:
            other = other.with_end(0, u)
            moved.append((new_idx, 0))
        if other.end2 == v:
            other = other.with_end(1, u)
            moved.append((new_idx, 1))
        edges.append(other)

    contracted = SignedGraph(tuple(x for x in graph.vertices if x != v), tuple(edges))
    dirs = tau.dirs[:e] + tau.dirs[e + 1:]
    values = tuple(f[:e]) + tuple(f[e + 1:])
    record = ContractionRecord(
        edge=e,
        record=edge,
        dirs=tau[e],
        value=f[e],
        merged=u,
        u=u,
        v=v,
        position=graph.vertices.index(v),
        moved=tuple(moved),
    )
    return contracted, Orientation(dirs), values, record


def expand_contraction(
    graph: SignedGraph,
    tau: Orientation,
    f: Sequence[int],
    record: ContractionRecord,
) -> Tuple[SignedGraph, Orientation, EdgeValuation]:
    """Inverse of contract_positive_edge: splits the merged vertex and re-inserts the edge."""
    if not graph.has_vertex(record.merged) or graph.has_vertex(record.v):
        raise ContractionError("record does not match the contracted graph")
    if len(tau) != graph.m or len(f) != graph.m:
        raise GraphError("orientation or valuation does not match the graph")

    edges = list(graph.edges)
    for idx, end in record.moved:
        edges[idx] = edges[idx].with_end(end, record.v)
    edges.insert(record.edge, record.record)

    vertices = list(graph.vertices)
    vertices.insert(record.position, record.v)

    dirs = list(tau.dirs)
    dirs.insert(record.edge, record.dirs)
    values = list(f)
    values.insert(record.edge, record.value)
    return SignedGraph(tuple(vertices), tuple(edges)), Orientation(tuple(dirs)), tuple(values)
