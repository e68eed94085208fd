from concurrent.futures import ThreadPoolExecutor

from globs.cache import character_values
from globs.cache import clear_caches
from objects.cache import MemoCache
from objects.charvalues import character_value
from objects.partitions import Partition


def test_cache_get_and_clear():
    cache = MemoCache(cache_limit=10)
    cache.cache("a", 1)
    assert cache.get("a") == 1
    cache.clear()
    assert cache.get("a") is None
    assert len(cache) == 0


def test_cache_resets_when_over_budget():
    cache = MemoCache(cache_limit=2, name="tiny")
    cache.cache(1, 1)
    cache.cache(2, 2)
    assert cache.cached_items == 2
    assert cache.resets == 0

    cache.cache(3, 3)
    assert cache.cached_items == 0
    assert cache.resets == 1


def test_cache_is_shared_between_threads():
    cache = MemoCache(cache_limit=10_000)
    with ThreadPoolExecutor(max_workers=8) as pool:
        list(pool.map(lambda key: cache.cache(key, key * key), range(1000)))

    assert len(cache) == 1000
    assert cache.get(31) == 961


def test_global_caches_are_per_n(fresh_caches):
    assert character_values(6) is character_values(6)
    assert character_values(6) is not character_values(7)

    character_value(Partition((3, 2, 1)), Partition((3, 3)))
    assert len(character_values(6)) > 0

    clear_caches()
    assert len(character_values(6)) == 0


def test_values_survive_a_reset(fresh_caches):
    lam, mu = Partition((4, 3, 1)), Partition((2, 2, 2, 2))
    expected = character_value(lam, mu)

    character_values(8).clear()
    assert character_value(lam, mu) == expected
