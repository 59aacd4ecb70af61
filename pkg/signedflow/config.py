from typing import TypedDict
from signedflow.types import CacheEngineName


class LimitsConfig(TypedDict, total=False):
    brute_force_max_edges: int
    z2_max_dimension: int
    generator_max_attempts: int


class EngineConfig(TypedDict, total=False):
    check_invariants: bool


class CacheConfig(TypedDict):
    engine: CacheEngineName


DEFAULT_LIMITS: LimitsConfig = {
    "brute_force_max_edges": 20,
    "z2_max_dimension": 24,
    "generator_max_attempts": 1000,
}

DEFAULT_ENGINE: EngineConfig = {
    "check_invariants": False,
}
