# Integer partitions and their diagrams. Rows and columns are 1-based.
import math
import random
from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable
from typing import Iterator
from typing import Optional
from typing import Sequence

from errors import InvalidPartition
from errors import InvalidSymbol
from errors import OutsideDiagram
from errors import WeightMismatch


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers. Labels both irreducible
    characters and cycle types of S_n."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)

        for idx, part in enumerate(parts):
            if not isinstance(part, int) or isinstance(part, bool) or part <= 0:
                raise InvalidPartition(f"Part {part!r} is not a positive integer.")
            if idx and part > parts[idx - 1]:
                raise InvalidPartition(f"Parts {parts} are not weakly decreasing.")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parses the comma separated text form, e.g. `4,3,1`. The empty
        string is the empty partition."""

        text = text.strip()
        if not text:
            return cls()

        try:
            parts = tuple(int(chunk) for chunk in text.split(","))
        except ValueError:
            raise InvalidPartition(f"Could not parse partition {text!r}.")

        return cls(parts)

    @classmethod
    def from_multiset(cls, parts: Iterable[int]) -> "Partition":
        """Builds a partition from parts in any order."""

        return cls(tuple(sorted(parts, reverse=True)))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def is_hook(self) -> bool:
        return self.length <= 1 or self.parts[1] == 1

    def part(self, i: int) -> int:
        """Returns λ_i, which is 0 past the last row."""

        if i <= self.length:
            return self.parts[i - 1]
        return 0

    def multiplicities(self) -> dict[int, int]:
        """Maps each part size to how often it occurs."""

        counts: dict[int, int] = {}
        for part in self.parts:
            counts[part] = counts.get(part, 0) + 1
        return counts

    def contains(self, i: int, j: int) -> bool:
        return 1 <= i <= self.length and 1 <= j <= self.parts[i - 1]


@dataclass(frozen=True)
class FrobeniusSymbol:
    """(a | b) with arms `a` and legs `b`. May be invalid; check `valid`."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.a)

    @property
    def weight(self) -> int:
        return sum(self.a) + sum(self.b) + len(self.a)

    def violations(self) -> list[str]:
        """Describes every condition the symbol breaks."""

        problems = []
        if len(self.a) != len(self.b):
            problems.append("a and b differ in length")

        for name, seq in (("a", self.a), ("b", self.b)):
            if any(not isinstance(x, int) for x in seq):
                problems.append(f"{name} has non-integral entries")
                continue
            if any(x < 0 for x in seq):
                problems.append(f"{name} has negative entries")
            if any(seq[i] <= seq[i + 1] for i in range(len(seq) - 1)):
                problems.append(f"{name} is not strictly decreasing")

        return problems

    @property
    def valid(self) -> bool:
        return not self.violations()

    def __str__(self) -> str:
        arms = ",".join(map(str, self.a))
        legs = ",".join(map(str, self.b))
        return f"({arms} | {legs})"


@dataclass(frozen=True)
class PrincipalHookData:
    """Arms, legs, lengths and content sums of the diagonal hooks."""

    k: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    h: tuple[int, ...]
    c: tuple[int, ...]


def conjugate(partition: Partition) -> Partition:
    """Transposes the diagram."""

    if not partition.parts:
        return Partition()

    return Partition(
        tuple(
            sum(1 for part in partition.parts if part >= i)
            for i in range(1, partition.parts[0] + 1)
        )
    )


def diagonal_length(partition: Partition) -> int:
    """Number of boxes (i, i) in the diagram."""

    k = 0
    while partition.part(k + 1) >= k + 1:
        k += 1
    return k


def _content_sum(partition: Partition, i: int) -> int:
    """Sum of contents j - u over the boxes (u, j) of λ(i, i)."""

    total = 0
    for u in range(i, partition.length + 1):
        row = partition.parts[u - 1]
        if row < i:
            break
        # columns i..row of row u
        width = row - i + 1
        total += (row * (row + 1) - (i - 1) * i) // 2 - u * width
    return total


def principal_hook_data(partition: Partition) -> PrincipalHookData:
    if not partition.parts:
        raise InvalidPartition("The empty partition has no principal hooks.")

    conj = conjugate(partition)
    k = diagonal_length(partition)
    a = tuple(partition.part(i) - i for i in range(1, k + 1))
    b = tuple(conj.part(i) - i for i in range(1, k + 1))

    return PrincipalHookData(
        k=k,
        a=a,
        b=b,
        h=tuple(x + y + 1 for x, y in zip(a, b)),
        c=tuple(_content_sum(partition, i) for i in range(1, k + 1)),
    )


def hook_length(partition: Partition, i: int, j: int) -> int:
    """Size of the hook at box (i, j)."""

    if not partition.contains(i, j):
        raise OutsideDiagram(f"Box ({i}, {j}) is not in the diagram of {partition}.")

    column = sum(1 for part in partition.parts if part >= j)
    return partition.parts[i - 1] - j + column - i + 1


def hook_lengths(partition: Partition) -> Iterator[int]:
    """All hook lengths, row by row."""

    conj = conjugate(partition)
    for i, row in enumerate(partition.parts, start=1):
        for j in range(1, row + 1):
            yield row - j + conj.parts[j - 1] - i + 1


def to_frobenius(partition: Partition) -> FrobeniusSymbol:
    data = principal_hook_data(partition)
    return FrobeniusSymbol(data.a, data.b)


def from_frobenius(symbol: FrobeniusSymbol) -> Partition:
    """Inverse of `to_frobenius`.

    Raises:
        InvalidSymbol: naming the first violated condition.
    """

    if problems := symbol.violations():
        raise InvalidSymbol(f"{symbol} is not a Frobenius symbol: {problems[0]}.")

    k = symbol.k
    if not k:
        return Partition()

    rows = [a + i for i, a in enumerate(symbol.a, start=1)]
    columns = [b + i for i, b in enumerate(symbol.b, start=1)]

    # Below the diagonal only the first k columns have boxes.
    for r in range(k + 1, columns[0] + 1):
        rows.append(sum(1 for col in columns if col >= r))

    return Partition(tuple(rows))


def enumerate_partitions(n: int, largest: Optional[int] = None) -> Iterator[Partition]:
    """Yields the partitions of `n` in reverse lexicographic order, so (n)
    first and (1, ..., 1) last."""

    if n < 0:
        raise ValueError(f"Cannot partition negative n={n}.")

    def _walk(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if not remaining:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in _walk(remaining - first, first):
                yield (first,) + rest

    for parts in _walk(n, n if largest is None else largest):
        yield Partition(parts)


_PARTITION_COUNTS: list[int] = [1]


def partition_count(n: int) -> int:
    """p_n by Euler's pentagonal number recurrence."""

    if n < 0:
        return 0

    counts = _PARTITION_COUNTS
    for m in range(len(counts), n + 1):
        total = 0
        k = 1
        while True:
            first = m - k * (3 * k - 1) // 2
            if first < 0:
                break
            sign = 1 if k % 2 else -1
            total += sign * counts[first]
            second = m - k * (3 * k + 1) // 2
            if second >= 0:
                total += sign * counts[second]
            k += 1
        counts.append(total)

    return counts[n]


def asymptotic_count(n: int) -> float:
    """Leading Hardy-Ramanujan term for p_n."""

    if n == 0:
        return 1.0

    return math.exp(2 * math.pi / math.sqrt(6) * math.sqrt(n)) / (4 * n * math.sqrt(3))


def beta_set(partition: Partition) -> list[int]:
    """First column hook lengths λ_i + ℓ - i, strictly decreasing."""

    length = partition.length
    return [part + length - i for i, part in enumerate(partition.parts, start=1)]


def _from_beta_set(betas: Sequence[int]) -> Partition:
    ordered = sorted(betas, reverse=True)
    length = len(ordered)
    parts = tuple(beta - (length - i) for i, beta in enumerate(ordered, start=1))
    return Partition(tuple(part for part in parts if part))


def rim_hooks(partition: Partition, length: int) -> list[tuple[Partition, int]]:
    """Every removal of a border strip of `length` boxes, with the partition
    left behind and the strip's height (rows spanned minus one)."""

    if length <= 0:
        raise ValueError(f"Rim hook length must be positive, got {length}.")

    betas = beta_set(partition)
    present = set(betas)
    ascending = sorted(betas)

    removals = []
    for beta in betas:
        target = beta - length
        if target < 0 or target in present:
            continue

        # beta numbers strictly between target and beta
        height = bisect_left(ascending, beta) - bisect_left(ascending, target)
        moved = [target if x == beta else x for x in betas]
        removals.append((_from_beta_set(moved), height))

    return removals


@lru_cache(maxsize=None)
def _bounded_count(n: int, cap: int) -> int:
    """Partitions of `n` whose parts are all at most `cap`."""

    if n == 0:
        return 1
    if cap == 0:
        return 0
    if cap > n:
        return _bounded_count(n, n)
    return _bounded_count(n, cap - 1) + _bounded_count(n - cap, cap)


def sample_partition(n: int, rng: random.Random) -> Partition:
    """Draws a partition of `n` uniformly at random."""

    parts = []
    remaining, cap = n, n
    while remaining:
        pick = rng.randrange(_bounded_count(remaining, cap))
        # Largest part m accounts for _bounded_count(remaining - m, m) partitions.
        for m in range(min(remaining, cap), 0, -1):
            block = _bounded_count(remaining - m, m)
            if pick < block:
                break
            pick -= block
        parts.append(m)
        remaining -= m
        cap = m

    return Partition(tuple(parts))


def pad(prefix: Iterable[int], n: int) -> Partition:
    """The cycle type [ν] of S_n: the parts of `prefix` followed by 1's."""

    parts = sorted(prefix, reverse=True)
    used = sum(parts)
    if used > n:
        raise WeightMismatch(f"Cycle prefix {parts} does not fit into n={n}.")

    return Partition(tuple(parts) + (1,) * (n - used))


def require_weight(partition: Partition, n: int) -> None:
    if partition.weight != n:
        raise WeightMismatch(f"{partition} is a partition of {partition.weight}, not {n}.")
