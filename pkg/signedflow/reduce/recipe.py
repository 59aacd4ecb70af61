from typing import Annotated, List, Literal, Tuple, Union
from pydantic import BaseModel, ConfigDict, Field
from signedflow.core import SignedGraph, Edge, canonical_orientation, switch_vertices
from signedflow.types import VertexId, EdgeId

# (internal edge id, edge as it was when the step ran)
EdgeRecord = Tuple[EdgeId, Edge]


class SuppressStep(BaseModel):
    """
    A degree-2 vertex was removed together with its two edges; the merged edge
    runs from the outer end of removed[0] to the outer end of removed[1] and is
    negative iff exactly one of them was.
    """
    model_config = ConfigDict(frozen=True)

    kind: Literal["suppress"] = "suppress"
    vertex: VertexId
    removed: Tuple[EdgeRecord, EdgeRecord]
    merged: EdgeRecord


class UncontractStep(BaseModel):
    """
    The edge-ends in `moved` were taken from `vertex` to the new vertex and a
    positive link vertex→new_vertex was added. `kept` is False when the link
    was deleted again by the admissibility branch.
    """
    model_config = ConfigDict(frozen=True)

    kind: Literal["uncontract"] = "uncontract"
    vertex: VertexId
    new_vertex: VertexId
    moved: Tuple[Tuple[EdgeId, int], ...]
    link: EdgeRecord
    kept: bool


class DropLoopStep(BaseModel):
    """
    A positive loop was removed from `vertex`. `isolated` is True when the
    vertex had nothing else left and was removed along with it.
    """
    model_config = ConfigDict(frozen=True)

    kind: Literal["drop_loop"] = "drop_loop"
    vertex: VertexId
    loop: EdgeRecord
    isolated: bool


class SwitchStep(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["switch"] = "switch"
    vertex: VertexId


Step = Annotated[
    Union[SuppressStep, UncontractStep, DropLoopStep, SwitchStep],
    Field(discriminator="kind"),
]


class LiftRecipe(BaseModel):
    """
    Ordered log of the steps that turned an original graph into a reduced one.

    Edges of the original graph keep their positions as internal ids 0..m-1,
    edges created on the way get fresh ids from m upwards. `edge_ids[i]` is the
    internal id of the i-th edge of the reduced graph.
    """
    model_config = ConfigDict(frozen=True)

    steps: List[Step] = Field(default_factory=list)
    reduced_vertices: Tuple[VertexId, ...]
    reduced_edges: Tuple[Edge, ...]
    edge_ids: Tuple[EdgeId, ...]

    @property
    def reduced_graph(self) -> SignedGraph:
        return SignedGraph(self.reduced_vertices, self.reduced_edges)

    @property
    def is_empty(self) -> bool:
        return not self.steps

    @classmethod
    def identity(cls, graph: SignedGraph) -> "LiftRecipe":
        return cls(
            reduced_vertices=graph.vertices,
            reduced_edges=graph.edges,
            edge_ids=tuple(range(graph.m)),
        )

    @classmethod
    def switching(cls, graph: SignedGraph, vertices: Tuple[VertexId, ...]) -> "LiftRecipe":
        """Recipe whose reduced graph is `graph` switched at `vertices`."""
        switched, _ = switch_vertices(graph, canonical_orientation(graph), vertices)
        return cls(
            steps=[SwitchStep(vertex=v) for v in vertices],
            reduced_vertices=switched.vertices,
            reduced_edges=switched.edges,
            edge_ids=tuple(range(graph.m)),
        )
