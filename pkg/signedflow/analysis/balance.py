import networkx as nx
from typing import Dict
from signedflow.core import SignedGraph, Sign
from signedflow.types import VertexId


def _switching_labels(graph: SignedGraph) -> Dict[VertexId, int]:
    """
    Labels every vertex ±1 along a BFS forest so that each tree edge becomes
    positive once the labels are applied as switches.
    """
    nxg = graph.to_networkx()
    labels: Dict[VertexId, int] = {}
    for component in graph.components():
        root = component[0]
        labels[root] = 1
        for u, v in nx.bfs_edges(nxg, root):
            key = min(nxg[u][v])
            sign = 1 if graph.edges[key].sign is Sign.POSITIVE else -1
            labels[v] = labels[u] * sign
    return labels


def balanced_component_count(graph: SignedGraph) -> int:
    labels = _switching_labels(graph)
    components = graph.components()
    component_of = {v: idx for idx, component in enumerate(components) for v in component}
    balanced = [True] * len(components)
    for edge in graph.edges:
        sign = 1 if edge.sign is Sign.POSITIVE else -1
        # a loop has labels[v] ** 2 == 1 and so is balanced iff positive
        if labels[edge.end1] * labels[edge.end2] * sign != 1:
            balanced[component_of[edge.end1]] = False
    return sum(balanced)


def is_balanced(graph: SignedGraph) -> bool:
    return balanced_component_count(graph) == len(graph.components())


def is_flow_admissible(graph: SignedGraph) -> bool:
    """
    Bouchet's characterization: G admits a nowhere-zero integer flow iff no
    single edge deletion changes the number of balanced components.
    """
    count = balanced_component_count(graph)
    return all(
        balanced_component_count(graph.remove_edge(e)) == count
        for e in range(graph.m)
    )
