# Structures related to caching etc.
import threading
from typing import Hashable
from typing import Optional

from logger import warning

CACHE_KEY = Hashable


class MemoCache:  # generic class
    """A key-value store with an entry budget. Overflowing the budget resets
    the whole store. Safe to share between threads."""

    def __init__(self, cache_limit: int = 500, name: str = "memo") -> None:
        """Establishes a cache and configures the limits.
        Args:
            cache_limit (int): How many objects can be cached before the
                whole cache is dropped.
            name (str): Shown in log messages.
        """
        self._cache: dict[CACHE_KEY, object] = {}  # The main cache object.
        self._cache_limit = cache_limit
        self._lock = threading.Lock()
        self.name = name
        self.resets = 0

    @property
    def cached_items(self) -> int:
        """Returns an int of the number of cached items stored."""

        return len(self._cache)

    def __len__(self) -> int:
        return self.cached_items

    def cache(self, key: CACHE_KEY, cache_obj: object) -> None:
        """Adds an object to the cache."""

        with self._lock:
            self._cache[key] = cache_obj
            self.run_checks()

    def get(self, key: CACHE_KEY) -> Optional[object]:
        """Retrieves a cached object from cache."""

        with self._lock:
            return self._cache.get(key)

    def clear(self) -> None:
        with self._lock:
            self._cache.clear()

    def run_checks(self) -> None:
        """Runs checks on the cache. Caller holds the lock."""

        if len(self._cache) <= self._cache_limit:
            return

        warning(
            f"Cache {self.name} went over its budget of {self._cache_limit} "
            "entries and was reset."
        )
        self._cache.clear()
        self.resets += 1
