from typing import Iterable, List, Tuple
import numpy as np
from signedflow.context import ctx
from signedflow.core import SignedGraph, Sign
from signedflow.errors import GeneratorError
from signedflow.types import EdgeId, VertexId


def _signed(n: int, pairs: List[Tuple[VertexId, VertexId]], negative: Iterable[EdgeId]) -> SignedGraph:
    return SignedGraph.build(n, [(u, v, Sign.POSITIVE) for u, v in pairs]).with_signature(negative)


def petersen(negative: Iterable[EdgeId] = ()) -> SignedGraph:
    """
    Outer 5-cycle on 0..4 (edges 0..4), spokes i to i+5 (edges 5..9) and the
    inner pentagram on 5..9 (edges 10..14).
    """
    pairs = [(i, (i + 1) % 5) for i in range(5)]
    pairs += [(i, i + 5) for i in range(5)]
    pairs += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return _signed(10, pairs, negative)


def complete_graph(n: int, negative: Iterable[EdgeId] = ()) -> SignedGraph:
    if n < 1:
        raise GeneratorError("complete graph needs at least one vertex")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return _signed(n, pairs, negative)


def complete_bipartite(a: int, b: int, negative: Iterable[EdgeId] = ()) -> SignedGraph:
    if a < 1 or b < 1:
        raise GeneratorError("both sides of a complete bipartite graph must be non-empty")
    pairs = [(u, a + v) for u in range(a) for v in range(b)]
    return _signed(a + b, pairs, negative)


def cycle_graph(n: int, negative: Iterable[EdgeId] = ()) -> SignedGraph:
    """n=1 is a single loop and n=2 a digon."""
    if n < 1:
        raise GeneratorError("cycle needs at least one vertex")
    pairs = [(i, (i + 1) % n) for i in range(n)]
    if n == 1:
        pairs = [(0, 0)]
    return _signed(n, pairs, negative)


def generate_random_cubic_signed(n: int, neg_prob: float, seed: int) -> SignedGraph:
    """
    Simple cubic graph from the pairing model: the 3n vertex points are
    shuffled and paired consecutively, and a pairing with a loop or a parallel
    pair is rejected. Each edge then turns negative with probability neg_prob.
    The same (n, neg_prob, seed) always gives the same graph.
    """
    if n < 4 or n % 2:
        raise GeneratorError(f"n must be even and at least 4, got {n}")
    if not 0 <= neg_prob <= 1:
        raise GeneratorError(f"neg_prob must lie in [0, 1], got {neg_prob}")

    rng = np.random.default_rng(seed)
    points = np.repeat(np.arange(n), 3)
    max_attempts = ctx.limits["generator_max_attempts"]
    for attempt in range(1, max_attempts + 1):
        paired = rng.permutation(points).reshape(-1, 2)
        pairs = sorted((int(min(u, v)), int(max(u, v))) for u, v in paired)
        if any(u == v for u, v in pairs) or len(set(pairs)) != len(pairs):
            continue
        negative = np.flatnonzero(rng.random(len(pairs)) < neg_prob)
        ctx.log.debug("pairing model succeeded after %d attempts", attempt)
        return _signed(n, pairs, (int(e) for e in negative))
    raise GeneratorError(f"no simple pairing on {n} vertices within {max_attempts} attempts")


def generate_random_multigraph(n: int, m: int, neg_prob: float, seed: int) -> SignedGraph:
    """
    Connected multigraph with n vertices and m edges. A random spanning path
    comes first, the remaining edges join uniformly drawn endpoints, so loops
    and parallel edges are allowed. Signs are drawn as in the cubic generator.
    """
    if n < 1:
        raise GeneratorError(f"n must be at least 1, got {n}")
    if m < n - 1:
        raise GeneratorError(f"{m} edges cannot connect {n} vertices")
    if not 0 <= neg_prob <= 1:
        raise GeneratorError(f"neg_prob must lie in [0, 1], got {neg_prob}")

    rng = np.random.default_rng(seed)
    order = rng.permutation(n)
    pairs = [(int(u), int(v)) for u, v in zip(order[:-1], order[1:])]
    extra = rng.integers(0, n, size=(m - len(pairs), 2))
    pairs.extend((int(u), int(v)) for u, v in extra)
    negative = np.flatnonzero(rng.random(m) < neg_prob)
    return _signed(n, pairs, (int(e) for e in negative))
