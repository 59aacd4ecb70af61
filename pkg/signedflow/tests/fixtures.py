from ..cli.generators import petersen, complete_graph, complete_bipartite, cycle_graph
from ..core import SignedGraph, Orientation, Direction

A = Direction.AWAY
T = Direction.TOWARD

PETERSEN_EDGES = 15


def petersen_all_negative() -> SignedGraph:
    return petersen(range(PETERSEN_EDGES))


def petersen_all_positive() -> SignedGraph:
    return petersen()


def k4(negative=()) -> SignedGraph:
    return complete_graph(4, negative)


def k33(negative=()) -> SignedGraph:
    return complete_bipartite(3, 3, negative)


def dumbbell() -> SignedGraph:
    """Negative loop at 0 (edge 0), positive edge 1-0 (edge 1), negative loop at 1 (edge 2)."""
    return SignedGraph.build(2, [(0, 0, "-"), (1, 0, "+"), (1, 1, "-")])


def dumbbell_flow():
    """Loop at 0 away, edge 1->0 with value 2, loop at 1 toward: a 3-flow."""
    return Orientation(((A, A), (A, T), (T, T))), (1, 2, 1)


def mixed_digon() -> SignedGraph:
    return SignedGraph.build(2, [(0, 1, "+"), (0, 1, "-")])


def triangle(negative=()) -> SignedGraph:
    return cycle_graph(3, negative)


def double_negative_loop() -> SignedGraph:
    """A single vertex of degree 4 carrying two negative loops."""
    return SignedGraph.build(1, [(0, 0, "-"), (0, 0, "-")])


def k4_doubled_edge() -> SignedGraph:
    """K4 with edge 0-1 doubled, so vertices 0 and 1 have degree 4."""
    return SignedGraph.build(4, [
        (0, 1, "+"), (0, 2, "+"), (0, 3, "+"), (1, 2, "+"), (1, 3, "+"), (2, 3, "+"), (0, 1, "+"),
    ])
