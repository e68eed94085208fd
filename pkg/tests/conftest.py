from collections import Counter

import pytest
from click.testing import CliRunner
from hypothesis import strategies as st

from globs.cache import clear_caches
from objects.partitions import Partition


@st.composite
def partition_strategy(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=n))

    # Throw n balls into k bins; the nonzero bin sizes form a partition.
    bin_assignments = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    counts = Counter(bin_assignments)

    return Partition.from_multiset(counts.values())


@pytest.fixture
def runner() -> CliRunner:
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        # click 8.2 keeps stderr apart on its own and dropped the flag.
        return CliRunner()


@pytest.fixture
def fresh_caches():
    clear_caches()
    yield
    clear_caches()
