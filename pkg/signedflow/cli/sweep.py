from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Iterator, List, Literal, Optional, Tuple
import numpy as np
from pydantic import BaseModel, ConfigDict
from signedflow.analysis import is_flow_admissible
from signedflow.cache import CACHE_ENGINE_MAP
from signedflow.config import LimitsConfig, EngineConfig
from signedflow.context import ctx
from signedflow.convert import six_flow_pipeline, verify_flow
from signedflow.core import SignedGraph
from signedflow.errors import InvariantBreach, PreconditionError
from signedflow.types import EdgeId

Outcome = Literal["flowed", "inadmissible", "precondition", "breach"]
Signature = Tuple[EdgeId, ...]


class SweepRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int
    negative: Signature
    admissible: bool
    flowed: bool
    verified: bool
    outcome: Outcome
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.admissible and not self.verified


def signatures_up_to(m: int, max_neg: int) -> Iterator[Signature]:
    """All negative edge sets of size at most max_neg, by size and then lexicographically."""
    for size in range(min(max_neg, m) + 1):
        yield from combinations(range(m), size)


def sampled_signatures(m: int, samples: int, seed: int) -> Iterator[Signature]:
    rng = np.random.default_rng(seed)
    for bits in rng.integers(0, 2, size=(samples, m)):
        yield tuple(int(e) for e in np.flatnonzero(bits))


def evaluate_signature(job: Tuple[int, SignedGraph, Signature]) -> SweepRow:
    index, underlying, negative = job
    graph = underlying.with_signature(negative)
    admissible = is_flow_admissible(graph)
    if not admissible:
        return SweepRow(
            index=index, negative=negative, admissible=False, flowed=False, verified=False,
            outcome="inadmissible",
        )
    try:
        tau, values = six_flow_pipeline(graph)
    except InvariantBreach as e:
        ctx.log.error("signature %d %s: %s", index, list(negative), e)
        return SweepRow(
            index=index, negative=negative, admissible=True, flowed=False, verified=False,
            outcome="breach", detail=e.detail,
        )
    except PreconditionError as e:
        return SweepRow(
            index=index, negative=negative, admissible=True, flowed=False, verified=False,
            outcome="precondition", detail=e.detail,
        )
    return SweepRow(
        index=index, negative=negative, admissible=True, flowed=True,
        verified=verify_flow(graph, tau, values, 6), outcome="flowed",
    )


WorkerSettings = Tuple[LimitsConfig, EngineConfig, str, int]


def worker_settings() -> WorkerSettings:
    """Limits, engine options, cache engine name and log level of the current context."""
    cache_engine = next(
        (name for name, cls in CACHE_ENGINE_MAP.items() if type(ctx.cache) is cls), "no_cache"
    )
    return LimitsConfig(**ctx.limits), EngineConfig(**ctx.engine), cache_engine, ctx.log.level


def configure_worker(limits: LimitsConfig, engine: EngineConfig, cache_engine: str, log_level: int) -> None:
    ctx.setup_logging(level=log_level)
    ctx.setup_limits(limits)
    ctx.setup_engine(engine)
    ctx.setup_cache_from_config({"engine": cache_engine})


def run_sweep(
    underlying: SignedGraph,
    signatures: Iterator[Signature],
    jobs: Optional[int] = None,
) -> List[SweepRow]:
    """Rows come back in enumeration order whether or not a process pool is used."""
    work = ((i, underlying, negative) for i, negative in enumerate(signatures))
    if jobs is None or jobs <= 1:
        return [evaluate_signature(job) for job in work]
    # spawned workers start from a default ctx
    with ProcessPoolExecutor(
        max_workers=jobs, initializer=configure_worker, initargs=worker_settings()
    ) as executor:
        return list(executor.map(evaluate_signature, work))


def format_report(rows: List[SweepRow]) -> str:
    lines = ["index |neg| negative admissible flowed verified outcome"]
    for row in rows:
        negative = ",".join(str(e) for e in row.negative) or "-"
        lines.append(
            f"{row.index} {len(row.negative)} {negative} "
            f"{'yes' if row.admissible else 'no'} "
            f"{'yes' if row.flowed else 'no'} "
            f"{'yes' if row.verified else 'no'} {row.outcome}"
        )
    counts = {outcome: 0 for outcome in ("flowed", "inadmissible", "precondition", "breach")}
    for row in rows:
        counts[row.outcome] += 1
    lines.append(
        f"total {len(rows)}: " + ", ".join(f"{name} {count}" for name, count in counts.items())
    )
    return "\n".join(lines) + "\n"
