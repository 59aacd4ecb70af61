import sys
import logging
import argparse
from pathlib import Path
from typing import Callable, Dict, Optional, Sequence, Type
from signedflow.analysis import balanced_component_count, is_flow_admissible, cyclic_edge_connectivity
from signedflow.context import ctx
from signedflow.convert import six_flow_pipeline, verify_flow
from signedflow.errors import (
    SignedFlowException,
    NotCubic,
    HasLoop,
    NotFlowAdmissible,
    CyclicConnectivityBelow5,
    InvariantBreach,
)
from signedflow.reduce import reduce_to_cubic
from .formats import parse_sgf, serialize_sgf, parse_flw, serialize_flw
from .generators import generate_random_cubic_signed
from .sweep import signatures_up_to, sampled_signatures, run_sweep, format_report

# most specific classes first
EXIT_CODES: Dict[Type[SignedFlowException], int] = {
    NotCubic: 2,
    HasLoop: 3,
    NotFlowAdmissible: 4,
    CyclicConnectivityBelow5: 5,
    InvariantBreach: 10,
}
GENERIC_EXIT_CODE = 1


def exit_code_for(e: SignedFlowException) -> int:
    for cls, code in EXIT_CODES.items():
        if isinstance(e, cls):
            return code
    return GENERIC_EXIT_CODE


def _yes_no(value: bool) -> str:
    return "yes" if value else "no"


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="ascii", newline="\n")


def cmd_check(args: argparse.Namespace) -> int:
    graph = parse_sgf(args.sgf.read_text(encoding="ascii"))
    lam = cyclic_edge_connectivity(graph)
    lines = [
        f"cubic: {_yes_no(graph.is_cubic())}",
        f"loops: {_yes_no(graph.has_loops())}",
        f"balanced components: {balanced_component_count(graph)}",
        f"flow-admissible: {_yes_no(is_flow_admissible(graph))}",
        f"cyclic edge-connectivity: {'inf' if lam == float('inf') else lam}",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_flow(args: argparse.Namespace) -> int:
    graph = parse_sgf(args.sgf.read_text(encoding="ascii"))
    tau, values = six_flow_pipeline(graph)
    if not verify_flow(graph, tau, values, 6):
        raise InvariantBreach("pipeline returned a valuation that does not verify")
    _emit(serialize_flw(tau, values), args.output)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    graph = parse_sgf(args.sgf.read_text(encoding="ascii"))
    doc = parse_flw(args.flw.read_text(encoding="ascii"))
    tau, values = doc.to_flow(graph)
    ok = verify_flow(graph, tau, values, args.k)
    sys.stdout.write(("ok" if ok else "fail") + "\n")
    return 0 if ok else GENERIC_EXIT_CODE


def cmd_reduce(args: argparse.Namespace) -> int:
    graph = parse_sgf(args.sgf.read_text(encoding="ascii"))
    reduced, recipe = reduce_to_cubic(graph)
    args.output.write_text(serialize_sgf(reduced), encoding="ascii", newline="\n")
    sidecar = args.output.with_name(args.output.name + ".recipe.json")
    sidecar.write_text(recipe.model_dump_json(indent=2) + "\n", encoding="ascii", newline="\n")
    ctx.log.info("recipe with %d steps written to %s", len(recipe.steps), sidecar)
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    graph = generate_random_cubic_signed(args.n, args.neg_prob, args.seed)
    _emit(serialize_sgf(graph), args.output)
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    underlying = parse_sgf(args.sgf.read_text(encoding="ascii"))
    if args.samples is not None:
        signatures = sampled_signatures(underlying.m, args.samples, args.seed)
    else:
        signatures = signatures_up_to(underlying.m, args.max_neg)
    ctx.setup_cache_from_config({"engine": "simple"})
    rows = run_sweep(underlying, signatures, jobs=args.jobs)
    ctx.log.info("analysis cache: %d hits, %d misses", ctx.cache.hits, ctx.cache.misses)
    sys.stdout.write(format_report(rows))
    return GENERIC_EXIT_CODE if any(row.failed for row in rows) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signedflow",
        description="Nowhere-zero 6-flows on signed graphs.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="more diagnostics on stderr (repeat for debug output)")
    parser.add_argument("--check-invariants", action="store_true",
                        help="check the conversion invariants after every step")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_check = subparsers.add_parser("check", help="print structural properties of a graph")
    p_check.add_argument("sgf", type=Path)
    p_check.set_defaults(handler=cmd_check)

    p_flow = subparsers.add_parser("flow", help="compute a verified nowhere-zero 6-flow")
    p_flow.add_argument("sgf", type=Path)
    p_flow.add_argument("-o", "--output", type=Path, default=None, help="flw file (default: stdout)")
    p_flow.set_defaults(handler=cmd_flow)

    p_verify = subparsers.add_parser("verify", help="verify a flow file against a graph")
    p_verify.add_argument("sgf", type=Path)
    p_verify.add_argument("flw", type=Path)
    p_verify.add_argument("-k", type=int, default=6, help="flow bound (default: 6)")
    p_verify.set_defaults(handler=cmd_verify)

    p_reduce = subparsers.add_parser("reduce", help="reduce a flow-admissible graph to a cubic one")
    p_reduce.add_argument("sgf", type=Path)
    p_reduce.add_argument("-o", "--output", type=Path, required=True,
                          help="reduced sgf, the recipe goes to <output>.recipe.json")
    p_reduce.set_defaults(handler=cmd_reduce)

    p_gen = subparsers.add_parser("gen", help="generate a random simple cubic signed graph")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--neg-prob", type=float, default=0.0)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("-o", "--output", type=Path, default=None, help="sgf file (default: stdout)")
    p_gen.set_defaults(handler=cmd_gen)

    p_sweep = subparsers.add_parser("sweep", help="run the pipeline over signatures of one graph")
    p_sweep.add_argument("sgf", type=Path)
    mode = p_sweep.add_mutually_exclusive_group()
    mode.add_argument("--max-neg", type=int, default=2,
                      help="all signatures with at most this many negative edges (default: 2)")
    mode.add_argument("--samples", type=int, default=None, help="number of uniform samples")
    p_sweep.add_argument("--seed", type=int, default=0, help="sampling seed (default: 0)")
    p_sweep.add_argument("--jobs", type=int, default=1, help="worker processes (default: 1)")
    p_sweep.set_defaults(handler=cmd_sweep)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    ctx.setup_logging(level=level)
    if args.check_invariants:
        ctx.setup_engine({"check_invariants": True})

    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except SignedFlowException as e:
        sys.stderr.write(f"error: {e}\n")
        return exit_code_for(e)
    except OSError as e:
        sys.stderr.write(f"error: {e}\n")
        return GENERIC_EXIT_CODE


if __name__ == "__main__":
    sys.exit(main())
