import enum
import networkx as nx
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Tuple, Dict, List, Iterable, FrozenSet
from signedflow.errors import GraphError, UnknownVertex, UnknownEdge
from signedflow.types import VertexId, EdgeId


class Sign(str, enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"

    def __str__(self) -> str:
        return str(self.value)

    def flipped(self) -> "Sign":
        return Sign.NEGATIVE if self is Sign.POSITIVE else Sign.POSITIVE

    def __mul__(self, other: "Sign") -> "Sign":
        return Sign.POSITIVE if self is other else Sign.NEGATIVE


class Edge(NamedTuple):
    end1: VertexId
    end2: VertexId
    sign: Sign

    @property
    def is_loop(self) -> bool:
        return self.end1 == self.end2

    @property
    def is_negative(self) -> bool:
        return self.sign is Sign.NEGATIVE

    def end(self, index: int) -> VertexId:
        return self.end1 if index == 0 else self.end2

    def with_end(self, index: int, vertex: VertexId) -> "Edge":
        if index == 0:
            return self._replace(end1=vertex)
        return self._replace(end2=vertex)


class Member(NamedTuple):
    """One edge-end in δ(v). A loop at v contributes two members."""
    edge: EdgeId
    end: int


@dataclass(frozen=True)
class SignedGraph:
    """
    A finite signed multigraph. Loops and parallel edges are allowed.

    Edge identity is the position in `edges`; the (end1, end2) order is part of
    that identity so that per-end directions of an Orientation are unambiguous.
    Vertex identity is the integer id itself, ids need not be contiguous.
    Instances are immutable, every modifying method returns a new graph.
    """

    vertices: Tuple[VertexId, ...]
    edges: Tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "edges", tuple(Edge(e[0], e[1], Sign(e[2])) for e in self.edges)
        )
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex ids")
        known = set(self.vertices)
        for idx, edge in enumerate(self.edges):
            if edge.end1 not in known or edge.end2 not in known:
                raise GraphError(f"edge {idx} references an unknown vertex")

    @classmethod
    def build(cls, n: int, edges: Iterable[Tuple[VertexId, VertexId, Sign | str]]) -> "SignedGraph":
        return cls(tuple(range(n)), tuple(Edge(u, v, Sign(s)) for u, v, s in edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _incidence(self) -> Dict[VertexId, Tuple[Member, ...]]:
        incidence: Dict[VertexId, List[Member]] = {v: [] for v in self.vertices}
        for idx, edge in enumerate(self.edges):
            incidence[edge.end1].append(Member(idx, 0))
            incidence[edge.end2].append(Member(idx, 1))
        return {v: tuple(members) for v, members in incidence.items()}

    def has_vertex(self, v: VertexId) -> bool:
        return v in self._incidence

    def check_vertex(self, v: VertexId) -> None:
        if v not in self._incidence:
            raise UnknownVertex(f"unknown vertex {v}")

    def edge(self, e: EdgeId) -> Edge:
        if not 0 <= e < len(self.edges):
            raise UnknownEdge(f"unknown edge {e}")
        return self.edges[e]

    def incident(self, v: VertexId) -> Tuple[Member, ...]:
        self.check_vertex(v)
        return self._incidence[v]

    def degree(self, v: VertexId) -> int:
        return len(self.incident(v))

    def is_cubic(self) -> bool:
        return all(len(members) == 3 for members in self._incidence.values())

    def has_loops(self) -> bool:
        return any(edge.is_loop for edge in self.edges)

    def negative_edges(self) -> FrozenSet[EdgeId]:
        return frozenset(idx for idx, edge in enumerate(self.edges) if edge.is_negative)

    def with_signature(self, negative: Iterable[EdgeId]) -> "SignedGraph":
        negative = set(negative)
        for e in negative:
            self.edge(e)
        edges = tuple(
            edge._replace(sign=Sign.NEGATIVE if idx in negative else Sign.POSITIVE)
            for idx, edge in enumerate(self.edges)
        )
        return SignedGraph(self.vertices, edges)

    def remove_edge(self, e: EdgeId) -> "SignedGraph":
        self.edge(e)
        return SignedGraph(self.vertices, self.edges[:e] + self.edges[e + 1:])

    def underlying_key(self) -> str:
        """Sign-blind key, identical for every signature of the same multigraph."""
        vertices = ",".join(str(v) for v in self.vertices)
        edges = ",".join(f"{e.end1}-{e.end2}" for e in self.edges)
        return f"{vertices}|{edges}"

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for idx, edge in enumerate(self.edges):
            graph.add_edge(edge.end1, edge.end2, key=idx, sign=edge.sign)
        return graph

    def components(self) -> List[List[VertexId]]:
        order = {v: i for i, v in enumerate(self.vertices)}
        comps = [sorted(c, key=order.__getitem__) for c in nx.connected_components(self.to_networkx())]
        comps.sort(key=lambda c: order[c[0]])
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def __repr__(self) -> str:
        edges = " ".join(f"{e.end1}{e.sign}{e.end2}" for e in self.edges)
        return f"SignedGraph(n={self.n}, m={self.m}, edges=[{edges}])"
