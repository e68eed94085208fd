"""Recovering a cycle type ν of S_n from the hook characters ξ_{n,k}.

The ξ_{n,k}(ν) are, up to sign, the coefficients of
q(X) = Π(X^ν_k - 1) / (X - 1). The lowest m coefficients of q come from
ξ_{n,n-1}, ..., ξ_{n,n-m}. From them we get p(X) = (X - 1) q(X) modulo X^m,
normalise to r(X) = Π(1 - X^ν_k), and peel off every part shorter than m
by dividing the truncated series by (1 - X^s). At most two parts of size >= m
remain and the sign of p(0) = (-1)^ℓ(ν) tells how many.
"""
from dataclasses import dataclass
from typing import Iterator

from errors import NotAClass
from helpers.polynomial import product_of_binomials
from helpers.polynomial import truncated_divide_one_minus
from logger import debug
from objects.charvalues import xi_values
from objects.partitions import Partition


def xi_prefix_length(n: int) -> int:
    """How many ξ values determine a class of S_n. At n = 3 one value is not
    enough: ξ_{3,2}, the sign, is +1 on both (3) and (1,1,1)."""

    if n == 1:
        return 1
    if n == 3:
        return 2
    return n // 2


@dataclass(frozen=True)
class XiPrefix:
    """(ξ_{n,n-1}(ν), ξ_{n,n-2}(ν), ...), highest index first."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        expected = xi_prefix_length(self.n)
        if len(self.values) != expected:
            raise NotAClass(
                f"S_{self.n} needs {expected} ξ values, got {len(self.values)}."
            )


def xi_prefix(cycle_type: Partition) -> XiPrefix:
    n = cycle_type.weight
    values = xi_values(n, cycle_type)
    return XiPrefix(
        n=n,
        values=tuple(values[n - 1 - j] for j in range(xi_prefix_length(n))),
    )


def product_polynomial(cycle_type: Partition) -> list[int]:
    """Π(X^ν_k - 1), coefficients from X^n down to X^0."""

    return product_of_binomials(cycle_type.parts)[::-1]


def normalized_series(prefix: XiPrefix) -> tuple[list[int], bool]:
    """r(X) = Π(1 - X^ν_k) modulo X^m, and whether ν has odd length.

    Raises:
        NotAClass: if p(0) is not ±1.
    """

    n = prefix.n
    m = len(prefix.values)

    # Low coefficients of q, then of p = (X - 1) q.
    q = [(-1) ** (n - 1 - j) * prefix.values[j] for j in range(m)]
    r = [-q[0]] + [q[j - 1] - q[j] for j in range(1, m)]

    if r[0] not in (1, -1):
        raise NotAClass(f"p(0) = {r[0]} is not ±1.")

    odd_length = r[0] == -1
    if odd_length:
        r = [-x for x in r]
    return r, odd_length


def peel_short_parts(series: list[int], n: int) -> Iterator[tuple[int, int]]:
    """Divides every part shorter than len(series) out of `series`, in place.

    Yields (s, multiplicity of s). Once the shorter parts are gone the
    coefficient at X^s is exactly minus that multiplicity.
    """

    placed = 0
    for s in range(1, len(series)):
        count = -series[s]
        if count < 0 or placed + count * s > n:
            raise NotAClass(f"Coefficient {series[s]} at X^{s} fits no cycle type.")
        for _ in range(count):
            truncated_divide_one_minus(series, s)
        placed += count * s
        yield s, count


def class_from_xi_prefix(prefix: XiPrefix) -> Partition:
    """The unique ν whose ξ prefix is `prefix`.

    Raises:
        NotAClass: if no cycle type of S_n has this prefix.
    """

    n = prefix.n
    if n == 1:
        return Partition((1,))

    m = len(prefix.values)
    r, odd_length = normalized_series(prefix)

    parts: list[int] = []
    for s, count in peel_short_parts(r, n):
        parts.extend([s] * count)

    remaining = n - sum(parts)
    odd_rest = odd_length != (len(parts) % 2 == 1)
    debug(f"Peeled {parts}, {remaining} left in {'one' if odd_rest else 'two'} part(s).")

    if not remaining:
        if odd_rest:
            raise NotAClass("Parity calls for one more part but nothing is left.")
    elif odd_rest:
        if remaining < m:
            raise NotAClass(f"A single remaining part {remaining} would have been peeled.")
        parts.append(remaining)
    else:
        if remaining < 2 * m:
            raise NotAClass(f"{remaining} cannot split into two parts of size >= {m}.")
        parts.extend(((remaining + 1) // 2, remaining // 2))

    result = Partition.from_multiset(parts)
    if xi_prefix(result).values != prefix.values:
        raise NotAClass(f"Best candidate {result} does not reproduce the prefix.")

    return result
