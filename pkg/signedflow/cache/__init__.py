from typing import Dict, Type
from .base import AbstractCache, NoCache
from .simple import SimpleCache
from .trace import TraceCache


CACHE_ENGINE_MAP: Dict[str, Type[AbstractCache]] = {
    "no_cache": NoCache,
    "simple": SimpleCache,
    "trace": TraceCache,
}
