from typing import TypeVar, TYPE_CHECKING, Literal, Tuple, Dict
if TYPE_CHECKING:
    from .cache.base import AbstractCache

VertexId = int
EdgeId = int

# per-edge integer values, indexed by edge id
EdgeValuation = Tuple[int, ...]
# per-vertex integer values
VertexValuation = Dict[VertexId, int]

# per-edge (Z2 element, Z3 element) pairs
Z2Z3Valuation = Tuple[Tuple[int, int], ...]
# per-edge elements of Z6, stored as 0..5
Z6Valuation = Tuple[int, ...]

CacheEngineName = Literal["no_cache", "simple", "trace"]
TCache = TypeVar("TCache", bound="AbstractCache")

RT = TypeVar("RT")  # function return type
