# Global caches that should be accessable everywhere.
import threading

from config import conf
from objects.cache import MemoCache

# -- Character values, one store per n --
_values: dict[int, MemoCache] = {}
_values_lock = threading.Lock()


def character_values(n: int) -> MemoCache:
    """Returns the memo of χ_λ(μ) evaluations for partitions of `n`."""

    if (cache := _values.get(n)) is not None:
        return cache

    with _values_lock:
        if n not in _values:
            _values[n] = MemoCache(cache_limit=conf.memo_budget, name=f"values[n={n}]")
        return _values[n]


def clear_caches() -> None:
    """Drops every memoised value."""

    with _values_lock:
        for cache in _values.values():
            cache.clear()
        _values.clear()
