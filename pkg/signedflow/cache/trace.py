from typing import Optional, Any, List, Literal, Tuple
from dataclasses import dataclass
from .base import AbstractCache, NoCache


CallMethod = Literal["has", "get", "set", "delete"]


@dataclass(frozen=True)
class Call:
    method: CallMethod
    args: Tuple[Any, ...]

    def matches(self, method: CallMethod, prefix: Tuple[Any, ...]) -> bool:
        return self.method == method and self.args[:len(prefix)] == prefix


class TraceCache(AbstractCache):
    """
    TraceCache records every call made through the cache interface so tests
    can assert on which analyses were looked up and stored. By default it
    stores nothing, like NoCache; pass another engine as `backing` to trace a
    cache that actually hits.
    """

    NAME = "TraceCache"

    calls: List[Call]
    backing: AbstractCache

    def __init__(self, backing: Optional[AbstractCache] = None):
        super().__init__()
        self.backing = backing if backing is not None else NoCache()
        self.reset()

    def reset(self):
        self.calls = []

    def initialise(self) -> None:
        self.backing.initialise()

    def record(self, hit: bool) -> None:
        super().record(hit)
        self.backing.record(hit)

    def has(self, key: str) -> bool:
        self.calls.append(Call("has", (key,)))
        return self.backing.has(key)

    def get(self, key: str) -> Optional[Any]:
        self.calls.append(Call("get", (key,)))
        return self.backing.get(key)

    def set(self, key: str, value: Any) -> None:
        self.calls.append(Call("set", (key, value)))
        self.backing.set(key, value)

    def delete(self, key: str) -> bool:
        self.calls.append(Call("delete", (key,)))
        return self.backing.delete(key)

    def count(self, method: CallMethod, *args: Any) -> int:
        return sum(1 for call in self.calls if call.matches(method, args))

    def called_once(self, method: CallMethod, *args: Any) -> None:
        self.called_times(method, 1, *args)

    def called_times(self, method: CallMethod, times: int, *args: Any) -> None:
        found = self.count(method, *args)
        if found != times:
            args_message = f" with args {args}" if args else ""
            raise AssertionError(
                f"method {method} was called {found} times{args_message} ({times} times expected)"
            )

    def not_called(self, method: CallMethod, *args: Any) -> None:
        self.called_times(method, 0, *args)
