from typing import Tuple
from signedflow.analysis import is_flow_admissible, cyclic_edge_connectivity
from signedflow.context import ctx
from signedflow.core import SignedGraph, Orientation
from signedflow.decorators import timed
from signedflow.errors import (
    NotCubic,
    HasLoop,
    NotFlowAdmissible,
    CyclicConnectivityBelow5,
    InvariantBreach,
    LiftError,
)
from signedflow.reduce import LiftRecipe, lift_flow
from signedflow.types import EdgeValuation
from signedflow.util import dump_state
from signedflow.z6 import find_z2z3_flow, z2z3_to_z6, normalize_cubic
from .engine import z6_to_six_flow
from .verify import verify_flow

REQUIRED_CYCLIC_CONNECTIVITY = 5


def check_pipeline_input(graph: SignedGraph) -> None:
    """Raises the first failing precondition, checked in a fixed order."""
    if not graph.is_cubic():
        raise NotCubic("graph is not cubic")
    if graph.has_loops():
        raise HasLoop("graph has a loop")
    lam = cyclic_edge_connectivity(graph)
    if lam < REQUIRED_CYCLIC_CONNECTIVITY:
        raise CyclicConnectivityBelow5(f"cyclic edge-connectivity is {lam}")
    if not is_flow_admissible(graph):
        raise NotFlowAdmissible("graph is not flow-admissible")


@timed
def six_flow_pipeline(graph: SignedGraph) -> Tuple[Orientation, EdgeValuation]:
    """
    Builds a verified nowhere-zero 6-flow on a cubic, loopless, flow-admissible,
    cyclically 5-edge-connected signed graph: a Z2 x Z3 flow is mapped into Z6,
    normalized by switching, turned into an integer 6-flow, and the switches
    are replayed to return to the original signature.
    """
    check_pipeline_input(graph)

    found = find_z2z3_flow(graph)
    if found is None:
        raise InvariantBreach(
            "no Z2 x Z3 flow with an even negative Z2 support on an admissible graph",
            repr(graph),
        )
    tau, pairs = found
    phi6 = tuple(z2z3_to_z6(a, b) for a, b in pairs)
    ctx.log.info("found Z6 valuation %s", " ".join(str(x) for x in phi6))

    normalized = normalize_cubic(graph, tau, phi6)
    ctx.log.info(
        "normalized with %d switches and %d sources",
        len(normalized.switched), normalized.sources,
    )
    tau_star, psi = z6_to_six_flow(normalized.graph, normalized.orientation, normalized.values)

    recipe = LiftRecipe.switching(graph, normalized.switched)
    try:
        tau_out, values = lift_flow(recipe, graph, tau_star, psi)
    except LiftError as e:
        raise InvariantBreach(
            f"undoing the switches failed: {e.detail}",
            dump_state(normalized.graph, tau_star, psi),
        )
    if not verify_flow(graph, tau_out, values, 6):
        raise InvariantBreach("final valuation is not a nowhere-zero 6-flow", dump_state(graph, tau_out, values))
    ctx.log.info("verified nowhere-zero 6-flow on %d edges", graph.m)
    return tau_out, values
