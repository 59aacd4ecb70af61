from typing import Optional, Any
from abc import ABC, abstractmethod


class AbstractCache(ABC):
    """
    Store for analysis results under keys of the form
    `<function name>.<graph key>`. Engines count hits and misses reported by
    cached_analysis, so a sweep can tell how much sharing across signatures
    actually happened.
    """

    NAME: str

    hits: int
    misses: int

    def __init__(self) -> None:
        self.hits = 0
        self.misses = 0

    def initialise(self) -> None:
        """Runs when the engine is installed on ctx."""

    def record(self, hit: bool) -> None:
        if hit:
            self.hits += 1
        else:
            self.misses += 1

    @abstractmethod
    def get(self, key: str) -> Optional[Any]: ...

    @abstractmethod
    def set(self, key: str, value: Any) -> None: ...

    @abstractmethod
    def has(self, key: str) -> bool: ...

    @abstractmethod
    def delete(self, key: str) -> bool: ...


class NoCache(AbstractCache):
    """Keeps nothing, every lookup misses."""

    NAME = "NoCache"

    def get(self, key: str) -> Optional[Any]:
        return None

    def set(self, key: str, value: Any) -> None:
        return None

    def has(self, key: str) -> bool:
        return False

    def delete(self, key: str) -> bool:
        return False
