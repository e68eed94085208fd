"""Brute-force checks of auxiliary facts about S_n character tables.

* Sign partitions: μ has every χ_λ(μ) in {0, ±1} and Σ_λ χ_λ(μ)² = n exactly
  for μ = (n), (3,2,1), (2,1,1) and (1,1).
* Hook degrees: the hooks (n-k, 1^k) are the only irreducibles whose degree is
  some binom(n-1, k), except at a handful of known n.
* Column orthogonality against the centralizer orders.
"""
import math
from dataclasses import dataclass
from dataclasses import field
from typing import Optional

from const import HOOK_DEGREE_EXCEPTIONS
from logger import info
from logger import warning
from objects.charvalues import character_table
from objects.charvalues import degree
from objects.partitions import enumerate_partitions
from objects.partitions import Partition


@dataclass
class CheckReport:
    check: str
    n: int
    passed: bool
    found: list[Partition] = field(default_factory=list)
    expected: list[Partition] = field(default_factory=list)
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "check": self.check,
            "n": self.n,
            "passed": self.passed,
            "found": [str(p) for p in self.found],
            "expected": [str(p) for p in self.expected],
            "note": self.note,
        }


def expected_sign_partitions(n: int) -> set[Partition]:
    expected = {Partition((n,))}
    extra = {6: (3, 2, 1), 4: (2, 1, 1), 2: (1, 1)}
    if n in extra:
        expected.add(Partition(extra[n]))
    return expected


def sign_partitions(n: int, limit: Optional[int] = None) -> set[Partition]:
    """Cycle types whose column holds only 0 and ±1 with exactly n nonzero
    entries."""

    table = character_table(n, limit)
    found = set()
    for cycle_type in table.cols:
        column = table.column(cycle_type)
        if all(abs(value) <= 1 for value in column) and sum(v * v for v in column) == n:
            found.add(cycle_type)
    return found


def binomial_degrees(n: int) -> set[int]:
    return {math.comb(n - 1, k) for k in range(n)}


def hook_degree_collisions(n: int) -> list[Partition]:
    """Non-hook λ of n whose degree equals some binom(n-1, k)."""

    degrees = binomial_degrees(n)
    return [
        partition
        for partition in enumerate_partitions(n)
        if not partition.is_hook and degree(partition) in degrees
    ]


def check_sign_partitions(max_n: int, limit: Optional[int] = None) -> list[CheckReport]:
    reports = []
    for n in range(1, max_n + 1):
        found = sign_partitions(n, limit)
        expected = expected_sign_partitions(n)
        reports.append(
            CheckReport(
                check="sign-partitions",
                n=n,
                passed=found == expected,
                found=sorted(found, key=lambda p: p.parts, reverse=True),
                expected=sorted(expected, key=lambda p: p.parts, reverse=True),
            )
        )
    return reports


def check_hook_degrees(max_n: int) -> list[CheckReport]:
    """Listed exceptions are skipped but must still collide; an unlisted
    collision is reported without failing the check."""

    reports = []
    for n in range(7, max_n + 1):
        collisions = hook_degree_collisions(n)

        if n in HOOK_DEGREE_EXCEPTIONS:
            report = CheckReport(
                check="hook-degrees",
                n=n,
                passed=bool(collisions),
                found=collisions,
                note="known exception" if collisions else "listed exception has no collision",
            )
        elif collisions:
            warning(f"S_{n}: non-hook characters of binomial degree: {', '.join(map(str, collisions))}")
            report = CheckReport(
                check="hook-degrees",
                n=n,
                passed=True,
                found=collisions,
                note="new exception",
            )
        else:
            report = CheckReport(check="hook-degrees", n=n, passed=True)

        reports.append(report)
    return reports


def check_orthogonality(max_n: int, limit: Optional[int] = None) -> list[CheckReport]:
    reports = []
    for n in range(1, max_n + 1):
        failures = character_table(n, limit).orthogonality_failures()
        reports.append(
            CheckReport(
                check="orthogonality",
                n=n,
                passed=not failures,
                found=[mu for pair in failures for mu in pair],
            )
        )
    return reports


CHECKS = {
    "sign-partitions": lambda max_n, limit: check_sign_partitions(max_n, limit),
    "hook-degrees": lambda max_n, limit: check_hook_degrees(max_n),
    "orthogonality": lambda max_n, limit: check_orthogonality(max_n, limit),
}


def run_check(name: str, max_n: int, limit: Optional[int] = None) -> list[CheckReport]:
    reports = CHECKS[name](max_n, limit)
    passed = sum(report.passed for report in reports)
    info(f"verify {name}: {passed}/{len(reports)} values of n passed (max n = {max_n}).")
    return reports
