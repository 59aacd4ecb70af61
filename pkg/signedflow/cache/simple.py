from typing import Any, Optional, Dict
from .base import AbstractCache


class SimpleCache(AbstractCache):
    """
    SimpleCache keeps values in a plain dict for the lifetime of the instance.
    Entries are never evicted, which is fine for a sweep over one underlying
    graph but not for long-running processes fed with arbitrary graphs.
    """

    NAME = "SimpleCache"

    _store: Dict[str, Any]

    def __init__(self) -> None:
        super().__init__()
        self._store = {}

    def initialise(self) -> None:
        from signedflow.context import ctx
        ctx.log.warning("SimpleCache never evicts entries, use with caution")

    def get(self, key: str) -> Optional[Any]:
        return self._store.get(key)

    def set(self, key: str, value: Any) -> None:
        self._store[key] = value

    def has(self, key: str) -> bool:
        return key in self._store

    def delete(self, key: str) -> bool:
        if key in self._store:
            del self._store[key]
            return True
        return False
