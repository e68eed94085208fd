import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from errors import InvalidPartition
from errors import InvalidSymbol
from errors import OutsideDiagram
from errors import WeightMismatch
from objects.partitions import asymptotic_count
from objects.partitions import conjugate
from objects.partitions import enumerate_partitions
from objects.partitions import from_frobenius
from objects.partitions import FrobeniusSymbol
from objects.partitions import hook_length
from objects.partitions import hook_lengths
from objects.partitions import pad
from objects.partitions import Partition
from objects.partitions import partition_count
from objects.partitions import principal_hook_data
from objects.partitions import rim_hooks
from objects.partitions import sample_partition
from objects.partitions import to_frobenius
from tests.conftest import partition_strategy


def P(*parts: int) -> Partition:
    return Partition(parts)


def test_partition_rejects_increasing_parts():
    with pytest.raises(InvalidPartition):
        Partition((1, 2))


def test_partition_rejects_zero_parts():
    with pytest.raises(InvalidPartition):
        Partition((2, 0))


def test_partition_parse_and_str():
    assert Partition.parse("4,3,1") == P(4, 3, 1)
    assert Partition.parse(" ") == Partition()
    assert str(P(4, 3, 1)) == "4,3,1"
    with pytest.raises(InvalidPartition):
        Partition.parse("4,x")


def test_partition_basics():
    lam = P(4, 3, 1)
    assert lam.weight == 8
    assert lam.length == 3
    assert lam.part(2) == 3
    assert lam.part(4) == 0
    assert P(3, 1, 1).is_hook
    assert not lam.is_hook
    assert P(2, 2, 1, 1).multiplicities() == {2: 2, 1: 2}


@pytest.mark.parametrize(
    "lam, expected",
    [
        (P(4, 3, 1), P(3, 2, 2, 1)),
        (P(5), P(1, 1, 1, 1, 1)),
        (P(2, 2), P(2, 2)),
    ],
)
def test_conjugate_known_values(lam, expected):
    assert conjugate(lam) == expected


@given(partition_strategy(max_n=20))
def test_conjugate_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam


def test_principal_hook_data_431():
    data = principal_hook_data(P(4, 3, 1))
    assert data.k == 2
    assert data.a == (3, 1)
    assert data.b == (2, 0)
    assert data.h == (6, 2)
    assert data.c == (4, 1)


def test_principal_hook_data_single_row():
    data = principal_hook_data(P(6))
    assert (data.k, data.a, data.b, data.h, data.c) == (1, (5,), (0,), (6,), (15,))


def test_principal_hook_data_22():
    data = principal_hook_data(P(2, 2))
    assert (data.k, data.a, data.b, data.h, data.c) == (2, (1, 0), (1, 0), (3, 1), (0, 0))


def test_principal_hook_data_empty():
    with pytest.raises(InvalidPartition):
        principal_hook_data(Partition())


@given(partition_strategy(max_n=25))
def test_principal_hooks_partition_the_diagram(lam):
    data = principal_hook_data(lam)
    assert sum(data.h) == lam.weight
    assert all(x - y >= 2 for x, y in zip(data.h, data.h[1:]))
    assert all(a + b + 1 == h for a, b, h in zip(data.a, data.b, data.h))


@given(partition_strategy(max_n=25))
def test_conjugation_swaps_arms_and_legs(lam):
    data = principal_hook_data(lam)
    flipped = principal_hook_data(conjugate(lam))

    assert (flipped.a, flipped.b) == (data.b, data.a)
    assert flipped.c == tuple(-c for c in data.c)
    assert (flipped.k, flipped.h) == (data.k, data.h)


def test_hook_length():
    lam = P(4, 3, 1)
    assert hook_length(lam, 1, 1) == 6
    assert hook_length(lam, 1, 2) == 4
    assert hook_length(lam, 3, 1) == 1
    with pytest.raises(OutsideDiagram):
        hook_length(lam, 3, 2)


@given(partition_strategy(max_n=15))
def test_hook_lengths_agree_with_single_lookups(lam):
    boxes = [(i, j) for i, row in enumerate(lam.parts, start=1) for j in range(1, row + 1)]
    assert list(hook_lengths(lam)) == [hook_length(lam, i, j) for i, j in boxes]


def test_frobenius_known_value():
    assert to_frobenius(P(4, 3, 1)) == FrobeniusSymbol((3, 1), (2, 0))
    assert from_frobenius(FrobeniusSymbol((3, 1), (2, 0))) == P(4, 3, 1)
    assert from_frobenius(FrobeniusSymbol((), ())) == Partition()


@given(partition_strategy(max_n=30))
def test_frobenius_round_trip(lam):
    symbol = to_frobenius(lam)
    assert symbol.valid
    assert symbol.weight == lam.weight
    assert from_frobenius(symbol) == lam


@pytest.mark.parametrize(
    "symbol",
    [
        FrobeniusSymbol((1, 1), (0, 0)),
        FrobeniusSymbol((2,), (-1,)),
        FrobeniusSymbol((2, 1), (0,)),
    ],
)
def test_from_frobenius_rejects_invalid_symbols(symbol):
    assert not symbol.valid
    with pytest.raises(InvalidSymbol):
        from_frobenius(symbol)


def test_enumerate_partitions_order():
    assert list(enumerate_partitions(4)) == [P(4), P(3, 1), P(2, 2), P(2, 1, 1), P(1, 1, 1, 1)]
    assert list(enumerate_partitions(0)) == [Partition()]


def test_partition_count_small_values():
    assert [partition_count(n) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


@pytest.mark.parametrize("n", range(16))
def test_partition_count_matches_enumeration(n):
    partitions = list(enumerate_partitions(n))
    assert len(partitions) == partition_count(n)
    assert len(set(partitions)) == len(partitions)


def test_partition_count_100_and_asymptotics():
    assert partition_count(100) == 190569292
    assert 0.94 <= partition_count(100) / asymptotic_count(100) <= 1.06
    assert asymptotic_count(0) == 1.0


def test_rim_hooks_known_values():
    assert rim_hooks(P(4, 3, 1), 6) == [(P(2), 2)]
    assert rim_hooks(P(2, 2), 3) == [(P(1), 1)]
    with pytest.raises(ValueError):
        rim_hooks(P(2, 2), 0)


@given(partition_strategy(max_n=20))
def test_single_box_rim_hooks_are_corners(lam):
    corners = [i for i in range(1, lam.length + 1) if lam.part(i) > lam.part(i + 1)]
    removals = rim_hooks(lam, 1)
    assert len(removals) == len(corners)
    assert all(height == 0 and rest.weight == lam.weight - 1 for rest, height in removals)


@given(partition_strategy(max_n=20), st.integers(min_value=1, max_value=20))
def test_rim_hook_removals_leave_partitions(lam, length):
    for rest, height in rim_hooks(lam, length):
        assert rest.weight == lam.weight - length
        assert 0 <= height < length
        assert all(rest.part(i) <= lam.part(i) for i in range(1, lam.length + 1))


@given(st.integers(min_value=0, max_value=40), st.integers(min_value=0, max_value=2**32))
def test_sample_partition_has_the_right_weight(n, seed):
    assert sample_partition(n, random.Random(seed)).weight == n


def test_sample_partition_reaches_every_partition():
    rng = random.Random(7)
    seen = {sample_partition(5, rng) for _ in range(500)}
    assert seen == set(enumerate_partitions(5))


def test_pad():
    assert pad((3,), 5) == P(3, 1, 1)
    assert pad((), 3) == P(1, 1, 1)
    assert pad((2, 4), 6) == P(4, 2)
    with pytest.raises(WeightMismatch):
        pad((6,), 5)
