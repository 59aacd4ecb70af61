"""
Text formats of the command line tools. Both are ASCII with LF line endings,
single-space separators and `#` comment lines.

    sgf 1           flw 1
    n m             m
    u v s           e d1 d2 x
    ...             ...

An sgf edge line gives the two end vertices in [0, n) and the sign token `+`
or `-`; edge ids follow line order. A flw line gives the edge id, the
directions `a`/`t` at end1 and end2, and the integer value on that edge.
"""
from typing import List, Sequence, Tuple
from pydantic import BaseModel, ConfigDict, ValidationError, model_validator
from signedflow.core import SignedGraph, Sign, Direction, Orientation, sign_consistent
from signedflow.errors import FormatError
from signedflow.types import EdgeValuation

SGF_HEADER = "sgf 1"
FLW_HEADER = "flw 1"


class SgfDocument(BaseModel):
    model_config = ConfigDict(frozen=True)

    version: int = 1
    n: int
    m: int
    edges: List[Tuple[int, int, Sign]]

    @model_validator(mode="after")
    def _check_shape(self) -> "SgfDocument":
        if self.n < 0 or self.m < 0:
            raise ValueError("counts must be non-negative")
        if len(self.edges) != self.m:
            raise ValueError(f"expected {self.m} edges, found {len(self.edges)}")
        for u, v, _ in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"vertex index out of range in edge {u} {v}")
        return self

    @classmethod
    def from_graph(cls, graph: SignedGraph) -> "SgfDocument":
        position = {v: i for i, v in enumerate(graph.vertices)}
        return cls(
            n=graph.n,
            m=graph.m,
            edges=[(position[e.end1], position[e.end2], e.sign) for e in graph.edges],
        )

    def to_graph(self) -> SignedGraph:
        return SignedGraph.build(self.n, self.edges)


class FlwEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    edge: int
    dir1: Direction
    dir2: Direction
    value: int


class FlwDocument(BaseModel):
    model_config = ConfigDict(frozen=True)

    version: int = 1
    m: int
    entries: List[FlwEntry]

    @model_validator(mode="after")
    def _check_cover(self) -> "FlwDocument":
        ids = sorted(entry.edge for entry in self.entries)
        if ids != list(range(self.m)):
            raise ValueError("flow lines must cover every edge exactly once")
        return self

    @classmethod
    def from_flow(cls, tau: Orientation, values: Sequence[int]) -> "FlwDocument":
        return cls(
            m=len(values),
            entries=[
                FlwEntry(edge=e, dir1=tau[e][0], dir2=tau[e][1], value=x)
                for e, x in enumerate(values)
            ],
        )

    def to_flow(self, graph: SignedGraph) -> Tuple[Orientation, EdgeValuation]:
        """Orientation and valuation for `graph`; FormatError if they do not fit it."""
        if self.m != graph.m:
            raise FormatError(f"flow covers {self.m} edges, graph has {graph.m}")
        ordered = sorted(self.entries, key=lambda entry: entry.edge)
        for entry in ordered:
            if not sign_consistent(graph.edges[entry.edge].sign, (entry.dir1, entry.dir2)):
                raise FormatError(f"directions of edge {entry.edge} do not match its sign")
        tau = Orientation(tuple((entry.dir1, entry.dir2) for entry in ordered))
        return tau, tuple(entry.value for entry in ordered)


def _content_lines(text: str) -> List[Tuple[int, str]]:
    if "\r" in text:
        raise FormatError("line endings must be LF")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return [(no, line) for no, line in enumerate(lines, start=1) if not line.startswith("#")]


def _ints(tokens: List[str], line: int) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got \"{' '.join(tokens)}\"", line)


def _header(lines: List[Tuple[int, str]], header: str, what: str) -> None:
    if not lines:
        raise FormatError(f"empty {what} document", 1)
    no, line = lines[0]
    if line != header:
        raise FormatError(f"expected header \"{header}\", got \"{line}\"", no)


def parse_sgf(text: str) -> SignedGraph:
    lines = _content_lines(text)
    _header(lines, SGF_HEADER, "sgf")
    if len(lines) < 2:
        raise FormatError("missing \"n m\" line", lines[0][0] + 1)
    no, line = lines[1]
    tokens = line.split(" ")
    if len(tokens) != 2:
        raise FormatError(f"expected \"n m\", got \"{line}\"", no)
    n, m = _ints(tokens, no)
    if n < 0 or m < 0:
        raise FormatError(f"counts must be non-negative, got \"{line}\"", no)
    counts_line = no

    body = lines[2:]
    if len(body) != m:
        last = body[-1][0] if body else no
        raise FormatError(f"expected {m} edge lines, found {len(body)}", last)

    edges = []
    for no, line in body:
        tokens = line.split(" ")
        if len(tokens) != 3 or tokens[2] not in ("+", "-"):
            raise FormatError(f"expected \"u v +|-\", got \"{line}\"", no)
        u, v = _ints(tokens[:2], no)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex index out of range [0, {n})", no)
        edges.append((u, v, Sign(tokens[2])))

    try:
        doc = SgfDocument(n=n, m=m, edges=edges)
    except ValidationError as e:
        raise FormatError(str(e.errors()[0]["msg"]), counts_line)
    return doc.to_graph()


def serialize_sgf(graph: SignedGraph) -> str:
    """Vertices are written by position, so non-contiguous ids are relabelled 0..n-1."""
    doc = SgfDocument.from_graph(graph)
    lines = [SGF_HEADER, f"{doc.n} {doc.m}"]
    lines.extend(f"{u} {v} {s.value}" for u, v, s in doc.edges)
    return "\n".join(lines) + "\n"


def parse_flw(text: str) -> FlwDocument:
    lines = _content_lines(text)
    _header(lines, FLW_HEADER, "flw")
    if len(lines) < 2:
        raise FormatError("missing edge count line", lines[0][0] + 1)
    no, line = lines[1]
    tokens = line.split(" ")
    if len(tokens) != 1:
        raise FormatError(f"expected the edge count, got \"{line}\"", no)
    (m,) = _ints(tokens, no)
    if m < 0:
        raise FormatError(f"edge count must be non-negative, got {m}", no)
    counts_line = no

    body = lines[2:]
    if len(body) != m:
        last = body[-1][0] if body else no
        raise FormatError(f"expected {m} flow lines, found {len(body)}", last)

    entries = []
    seen = set()
    for no, line in body:
        tokens = line.split(" ")
        if len(tokens) != 4 or tokens[1] not in ("a", "t") or tokens[2] not in ("a", "t"):
            raise FormatError(f"expected \"e a|t a|t x\", got \"{line}\"", no)
        e, x = _ints([tokens[0], tokens[3]], no)
        if not 0 <= e < m:
            raise FormatError(f"edge id {e} out of range [0, {m})", no)
        if e in seen:
            raise FormatError(f"edge {e} appears twice", no)
        seen.add(e)
        entries.append(FlwEntry(edge=e, dir1=Direction(tokens[1]), dir2=Direction(tokens[2]), value=x))

    try:
        return FlwDocument(m=m, entries=entries)
    except ValidationError as e:
        raise FormatError(str(e.errors()[0]["msg"]), counts_line)


def serialize_flw(tau: Orientation, values: Sequence[int]) -> str:
    doc = FlwDocument.from_flow(tau, values)
    lines = [FLW_HEADER, str(doc.m)]
    lines.extend(f"{x.edge} {x.dir1.value} {x.dir2.value} {x.value}" for x in doc.entries)
    return "\n".join(lines) + "\n"
