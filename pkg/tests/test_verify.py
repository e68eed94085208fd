import pytest

from errors import TableTooLarge
from helpers.verify import check_hook_degrees
from helpers.verify import check_orthogonality
from helpers.verify import check_sign_partitions
from helpers.verify import expected_sign_partitions
from helpers.verify import hook_degree_collisions
from helpers.verify import run_check
from helpers.verify import sign_partitions
from objects.partitions import Partition


def P(*parts: int) -> Partition:
    return Partition(parts)


def test_sign_partitions_at_6():
    assert sign_partitions(6) == {P(6), P(3, 2, 1)}


@pytest.mark.parametrize("n", range(1, 11))
def test_sign_partitions_match_the_list(n):
    assert sign_partitions(n) == expected_sign_partitions(n)


def test_sign_partition_reports_pass():
    assert all(report.passed for report in check_sign_partitions(10))


@pytest.mark.parametrize("n", [7, 8, 9, 10, 11, 13, 14])
def test_only_hooks_have_binomial_degrees(n):
    assert hook_degree_collisions(n) == []


def test_12_is_an_exception():
    collisions = hook_degree_collisions(12)
    assert collisions
    assert all(not lam.is_hook for lam in collisions)


def test_hook_degree_reports():
    reports = check_hook_degrees(14)
    assert [report.n for report in reports] == list(range(7, 15))
    assert all(report.passed for report in reports)
    assert next(report for report in reports if report.n == 12).note == "known exception"


def test_orthogonality_reports():
    reports = check_orthogonality(8)
    assert len(reports) == 8
    assert all(report.passed for report in reports)


def test_run_check_respects_the_table_limit():
    with pytest.raises(TableTooLarge):
        run_check("orthogonality", 9, limit=8)


def test_report_as_dict():
    record = check_sign_partitions(6)[-1].as_dict()
    assert record["check"] == "sign-partitions"
    assert record["n"] == 6
    assert record["found"] == ["6", "3,2,1"]
