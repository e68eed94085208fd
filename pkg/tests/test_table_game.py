import math
from fractions import Fraction

import pytest

from const import GameStep
from errors import Unidentifiable
from helpers.rng import shuffled
from helpers.rng import SplitMix64
from objects.charvalues import character_value
from objects.charvalues import degree
from objects.partitions import enumerate_partitions
from objects.partitions import Partition
from objects.partitions import partition_count
from objects.table_game import _brute_force
from objects.table_game import bound_fraction
from objects.table_game import CoveredTable
from objects.table_game import identify_classes
from objects.table_game import locate_basic_columns
from objects.table_game import locate_degree_rows
from objects.table_game import locate_hook_rows
from objects.table_game import locate_identity_column
from objects.table_game import order_hook_rows
from objects.table_game import play_game
from objects.table_game import uncovering_bound


def hook(n: int, k: int) -> Partition:
    return Partition((n - k,) + (1,) * k)


def fixed_points(n: int, *cycles: int) -> Partition:
    return Partition(cycles + (1,) * (n - sum(cycles)))


def test_splitmix_is_deterministic():
    first, second = SplitMix64(42), SplitMix64(42)
    assert [first.next() for _ in range(5)] == [second.next() for _ in range(5)]
    assert all(0 <= SplitMix64(seed).below(7) < 7 for seed in range(50))


def test_shuffle_is_a_permutation():
    perm = shuffled(100, SplitMix64(3))
    assert sorted(perm) == list(range(100))
    assert perm != list(range(100))


def test_covered_table_counts_distinct_entries():
    t = CoveredTable(7, seed=1)
    value = t.query(3, 4)
    assert t.query(3, 4) == value
    assert t.query_count == 1
    assert t.uncovered == {(3, 4)}
    with pytest.raises(IndexError):
        t.query(15, 0)


def test_steps_find_the_right_rows_and_columns():
    n = 8
    t = CoveredTable(n, seed=5)

    a = locate_identity_column(t)
    assert t.hidden_col_label(a) == Partition((1,) * n)
    assert t.query_count <= GameStep.LOCATE_IDENTITY_COLUMN.bound(n, t.size)

    rows = locate_degree_rows(t, a)
    assert {t.hidden_row_label(row) for row in rows} == {hook(n, 1), hook(n, n - 2)}

    basic = locate_basic_columns(t, a, rows)
    assert t.hidden_row_label(basic.xi_one) == hook(n, 1)
    assert t.hidden_row_label(basic.xi_partner) == hook(n, n - 2)
    assert t.hidden_col_label(basic.b) == fixed_points(n, 2)
    assert t.hidden_col_label(basic.c) == fixed_points(n, 3)
    assert t.hidden_col_label(basic.d) == fixed_points(n, 2, 2)

    hooks = locate_hook_rows(t, a, basic.c, basic.d)
    assert {t.hidden_row_label(row) for row in hooks} == {hook(n, k) for k in range(n)}

    ordered = order_hook_rows(t, hooks, a, basic.b)
    assert [t.hidden_row_label(row) for row in ordered] == [hook(n, k) for k in range(n)]

    col_labels = identify_classes(t, ordered)
    assert all(col_labels[col] == t.hidden_col_label(col) for col in range(t.size))


def test_hook_relation_singles_out_hooks():
    # χ(1) = 4χ((1 2 3)) - 3χ((1 2)(3 4))
    n = 8
    three, double = fixed_points(n, 3), fixed_points(n, 2, 2)
    assert degree(hook(n, 1)) == 4 * character_value(hook(n, 1), three) - 3 * character_value(hook(n, 1), double)
    four_four = Partition((4, 4))
    assert degree(four_four) != 4 * character_value(four_four, three) - 3 * character_value(four_four, double)


def test_content_sums_of_hooks():
    n = 8
    f = [Fraction(math.comb(n - k, 2) - math.comb(k + 1, 2)) for k in range(n)]
    assert f[0] == 28
    assert f[1] == 20
    assert f[-1] == -28
    assert f == sorted(f, reverse=True)


@pytest.mark.parametrize("n", range(7, 15))
@pytest.mark.parametrize("seed", range(5))
def test_game_labels_everything(n, seed):
    result = play_game(n, seed)
    p_n = partition_count(n)

    assert result.ok
    assert sorted(result.row_labels.values(), key=lambda p: p.parts) == sorted(
        result.col_labels.values(), key=lambda p: p.parts
    )
    assert len(set(result.row_labels.values())) == p_n
    assert result.uncovered_count <= uncovering_bound(n)
    assert result.fraction <= bound_fraction(n)

    for step, count in result.steps.items():
        assert count <= step.bound(n, p_n), step


@pytest.mark.parametrize("n", [8, 11])
def test_other_shuffles_change_nothing_but_positions(n):
    first, second = CoveredTable(n, seed=1), CoveredTable(n, seed=2)
    assert [first.hidden_row_label(row) for row in range(first.size)] != [
        second.hidden_row_label(row) for row in range(second.size)
    ]

    results = [play_game(n, seed=1), play_game(n, seed=2)]
    p_n = partition_count(n)
    for result in results:
        assert result.ok
        assert set(result.row_labels.values()) == set(enumerate_partitions(n))
        assert set(result.col_labels.values()) == set(enumerate_partitions(n))
        assert list(result.steps) == list(results[0].steps)
        for step, count in result.steps.items():
            assert count <= step.bound(n, p_n), step


def test_same_seed_same_game():
    first, second = play_game(9, seed=4), play_game(9, seed=4)
    assert first.steps == second.steps
    assert first.row_labels == second.row_labels
    assert first.col_labels == second.col_labels


def test_bounds_at_12_and_14():
    assert uncovering_bound(12) == 1937
    assert uncovering_bound(14) == 3794
    assert play_game(12, 0).uncovered_count <= 1937
    assert play_game(14, 0).uncovered_count <= 3794
    assert float(bound_fraction(12)) <= 0.327
    assert float(bound_fraction(14)) <= 0.209


def test_bound_fraction_decays():
    fractions = [bound_fraction(n) for n in range(8, 21)]
    assert all(a > b for a, b in zip(fractions, fractions[1:]))


def test_average_fraction_is_below_the_bound():
    for n in (9, 11, 13):
        results = [play_game(n, seed) for seed in range(3)]
        average = sum(result.fraction for result in results) / len(results)
        assert average <= bound_fraction(n)


def test_entries_on_demand():
    result = play_game(9, seed=2, table_limit=8)
    assert result.ok


@pytest.mark.parametrize("n", [4, 6])
def test_unidentifiable_sizes(n):
    with pytest.raises(Unidentifiable):
        play_game(n, 0)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_small_tables_are_uncovered_completely(n):
    result = play_game(n, seed=11)
    assert result.ok
    assert result.uncovered_count == partition_count(n) ** 2
    assert list(result.steps) == [GameStep.BRUTE_FORCE]


def test_result_as_dict():
    record = play_game(7, 0).as_dict()
    assert set(record) == {"n", "p_n", "seed", "uncovered", "bound", "fraction", "fraction_exact", "steps", "ok"}
    assert record["p_n"] == 15
    assert record["bound"] == 262
    assert set(record["steps"]) == {step.key for step in GameStep if step is not GameStep.BRUTE_FORCE}


def test_brute_force_refuses_large_tables():
    t = CoveredTable(7, seed=0)
    with pytest.raises(ValueError):
        _brute_force(t)
    assert t.query_count == 0
