from typing import Any, Callable
from time import time
from functools import wraps
from signedflow.context import ctx
from signedflow.types import RT


def cached_analysis(key_fn: Callable[..., str]) -> Callable[[Callable[..., RT]], Callable[..., RT]]:
    """
    cached_analysis decorates expensive, pure analysis functions. The wrapper
    builds a cache key out of
    - function name
    - key_fn(*args, **kwargs), usually a canonical key of the graph argument

    e.g. cyclic_edge_connectivity.0-1,0-2,1-2

    and tries to fetch the value from ctx.cache. If the value is not there, the
    original function is called and the value is stored before being returned.
    key_fn decides what the result depends on: a sign-blind key lets every
    signature of one underlying graph share a single entry.
    """
    def decorator(func: Callable[..., RT]) -> Callable[..., RT]:

        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> RT:
            cache_key = f"{func.__name__}.{key_fn(*args, **kwargs)}"
            cache = ctx.cache

            t1 = time()
            if cache.has(cache_key):
                value = cache.get(cache_key)
                cache.record(hit=True)
                td = time() - t1
                ctx.log.debug("%s hit %s %.3f secs", cache.NAME, func.__name__, td)
                return value

            t1 = time()
            value = func(*args, **kwargs)
            td = time() - t1
            cache.record(hit=False)
            ctx.log.debug("%s miss %s %.3f secs", cache.NAME, func.__name__, td)
            cache.set(cache_key, value)
            return value

        return wrapper

    return decorator


def timed(func: Callable[..., RT]) -> Callable[..., RT]:
    """
    timed logs the wall time of a top-level operation at debug level
    """
    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> RT:
        t1 = time()
        try:
            return func(*args, **kwargs)
        finally:
            ctx.log.debug("%s took %.3f secs", func.__name__, time() - t1)

    return wrapper
