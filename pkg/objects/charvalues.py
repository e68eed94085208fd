import math
import time
from dataclasses import dataclass
from dataclasses import field
from functools import lru_cache
from typing import Optional

from config import conf
from errors import TableTooLarge
from errors import WeightMismatch
from globs.cache import character_values
from helpers.polynomial import divide_by_x_minus_one
from helpers.polynomial import product_of_binomials
from logger import debug
from logger import info
from objects.partitions import enumerate_partitions
from objects.partitions import hook_lengths
from objects.partitions import Partition
from objects.partitions import require_weight
from objects.partitions import rim_hooks


@lru_cache(maxsize=65536)
def degree(partition: Partition) -> int:
    """χ_λ(1) by the hook-length formula."""

    return math.factorial(partition.weight) // math.prod(hook_lengths(partition))


def _evaluate(partition: Partition, cycles: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama on the cycles left, largest first."""

    if not cycles:
        return 1
    if cycles[0] == 1:
        # Only fixed points remain.
        return degree(partition)
    if cycles[0] > partition.parts[0] + partition.length - 1:
        # Longer than the largest hook.
        return 0

    memo = character_values(partition.weight)
    key = (partition.parts, cycles)
    if (cached := memo.get(key)) is not None:
        return cached

    rest = cycles[1:]
    value = 0
    for remainder, height in rim_hooks(partition, cycles[0]):
        term = _evaluate(remainder, rest)
        value += -term if height % 2 else term

    memo.cache(key, value)
    return value


def character_value(partition: Partition, cycle_type: Partition) -> int:
    """Exact χ_λ(μ).

    Raises:
        WeightMismatch: if λ and μ are partitions of different n.
    """

    if partition.weight != cycle_type.weight:
        raise WeightMismatch(
            f"χ_{partition} is a character of S_{partition.weight}, "
            f"but {cycle_type} is a cycle type of S_{cycle_type.weight}."
        )

    return _evaluate(partition, cycle_type.parts)


def xi_values(n: int, cycle_type: Partition) -> tuple[int, ...]:
    """(ξ_{n,0}(ν), ..., ξ_{n,n-1}(ν)), read off Π(X^ν_k - 1) / (X - 1)."""

    require_weight(cycle_type, n)
    quotient = divide_by_x_minus_one(product_of_binomials(cycle_type.parts))

    return tuple(
        -quotient[n - 1 - k] if k % 2 else quotient[n - 1 - k] for k in range(n)
    )


def centralizer_order(cycle_type: Partition) -> int:
    """z_μ = Π j^{m_j} m_j!, so n! / z_μ is the class size."""

    return math.prod(
        part**count * math.factorial(count)
        for part, count in cycle_type.multiplicities().items()
    )


@dataclass(frozen=True)
class CharTable:
    """χ_λ(μ) for every pair of partitions of n. Rows are characters,
    columns are classes."""

    n: int
    rows: tuple[Partition, ...]
    cols: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]

    _row_index: dict[Partition, int] = field(init=False, repr=False, compare=False)
    _col_index: dict[Partition, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_row_index", {p: i for i, p in enumerate(self.rows)})
        object.__setattr__(self, "_col_index", {p: j for j, p in enumerate(self.cols)})

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def value(self, character: Partition, cycle_type: Partition) -> int:
        return self.values[self._row_index[character]][self._col_index[cycle_type]]

    def row(self, character: Partition) -> tuple[int, ...]:
        return self.values[self._row_index[character]]

    def column(self, cycle_type: Partition) -> tuple[int, ...]:
        j = self._col_index[cycle_type]
        return tuple(row[j] for row in self.values)

    def orthogonality_failures(self) -> list[tuple[Partition, Partition]]:
        """Column pairs (μ, ν) breaking Σ_λ χ_λ(μ) χ_λ(ν) = δ_μν z_μ."""

        failures = []
        columns = [self.column(cycle_type) for cycle_type in self.cols]
        for j, first in enumerate(self.cols):
            for k in range(j, len(self.cols)):
                product = sum(x * y for x, y in zip(columns[j], columns[k]))
                expected = centralizer_order(first) if j == k else 0
                if product != expected:
                    failures.append((first, self.cols[k]))

        return failures


def character_table(n: int, limit: Optional[int] = None) -> CharTable:
    """The full p_n x p_n table in reverse lexicographic order.

    Raises:
        TableTooLarge: if `n` is above `limit` (the configured table limit by
            default).
    """

    limit = conf.table_limit if limit is None else limit
    if n < 1:
        raise ValueError(f"S_{n} has no character table here; n must be >= 1.")
    if n > limit:
        raise TableTooLarge(f"Refusing to build the S_{n} table (limit is n={limit}).")

    start_time = time.time()
    labels = tuple(enumerate_partitions(n))
    values = tuple(
        tuple(_evaluate(row, col.parts) for col in labels) for row in labels
    )

    table = CharTable(n=n, rows=labels, cols=labels, values=values)

    time_taken = (time.time() - start_time) * 1000
    info(f"Built the {table.dimension}x{table.dimension} character table of S_{n} ({time_taken:.2f}ms)")
    debug(f"Memo for n={n} holds {len(character_values(n))} entries.")

    return table
