from typing import Sequence, TYPE_CHECKING
if TYPE_CHECKING:
    from signedflow.core import SignedGraph, Orientation


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def dump_state(graph: "SignedGraph", tau: "Orientation", values: Sequence[int]) -> str:
    """Human-readable snapshot attached to InvariantBreach reports."""
    from signedflow.core import boundary
    lines = [f"vertices: {' '.join(str(v) for v in graph.vertices)}"]
    for idx, edge in enumerate(graph.edges):
        a, b = tau[idx] if idx < len(tau) else ("?", "?")
        value = values[idx] if idx < len(values) else "?"
        lines.append(f"  e{idx}: {edge.end1} {edge.end2} {edge.sign} {a}{b} {value}")
    if len(tau) == graph.m and len(values) == graph.m:
        try:
            partial = boundary(graph, tau, values)
            lines.append("boundary: " + " ".join(f"{v}:{x}" for v, x in partial.items()))
        except Exception as e:
            lines.append(f"boundary: unavailable ({e})")
    return "\n".join(lines)
