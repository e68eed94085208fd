"""Identifying an irreducible character of S_n from a handful of its values.

The run is adaptive and strictly sequential:

1. `run_hd` finds the principal hook lengths h and the values d by searching
   downwards for the first nonzero χ([h_1, ..., h_{u-1}, m]).
2. `run_c` turns one more value per hook into the content sums c.
3. `symbol_from_hc` solves for the arms a and legs b.

For an irreducible character the result is the Frobenius symbol of its
partition. A symbol that is not a Frobenius symbol of a partition of n proves
the character reducible; a reducible character can still produce a valid
looking symbol, so a returned partition is only trustworthy for irreducibles.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional
from typing import Union

from const import BracketForm
from errors import NotACharacter
from errors import ReducibleCharacter
from logger import debug
from objects.oracle import CharacterOracle
from objects.partitions import FrobeniusSymbol
from objects.partitions import from_frobenius
from objects.partitions import Partition

Number = Union[int, Fraction]


def binom2(x: Number) -> Number:
    """x choose 2 as a polynomial in x, so it also takes negative and
    fractional arguments."""

    return _integral(Fraction(x) * (x - 1) / 2)


def _integral(x: Number) -> Number:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


@dataclass(frozen=True)
class CharSymbol:
    """Hook data gathered from a character and the symbol (a | b) built
    from it."""

    n: int
    h: tuple[int, ...]
    d: tuple[int, ...]
    c: tuple[int, ...]
    a: tuple[Number, ...]
    b: tuple[Number, ...]

    @property
    def k(self) -> int:
        return len(self.h)

    @property
    def weight(self) -> int:
        return sum(self.h)

    @property
    def frobenius(self) -> FrobeniusSymbol:
        return FrobeniusSymbol(self.a, self.b)

    def problems(self) -> list[str]:
        problems = self.frobenius.violations()
        if self.weight != self.n:
            problems.append(f"weight {self.weight} is not n={self.n}")
        return problems

    @property
    def valid(self) -> bool:
        return not self.problems()

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "h": list(self.h),
            "d": list(self.d),
            "c": list(self.c),
            "a": [str(x) for x in self.a],
            "b": [str(x) for x in self.b],
            "valid": self.valid,
            "weight": self.weight,
        }


@dataclass(frozen=True)
class NotIrreducible:
    """Outcome of a run that proved the character reducible."""

    reason: str
    symbol: Optional[CharSymbol] = None


def run_hd(oracle: CharacterOracle) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Principal hook lengths h and values d = (χ(1), χ([h_1]), ...).

    Raises:
        NotACharacter: if χ(1) <= 0.
        ReducibleCharacter: if a search finds no nonzero value.
    """

    n = oracle.n
    d = [oracle.query_prefix(())]
    if d[0] <= 0:
        raise NotACharacter(f"χ(1) = {d[0]} is not a positive degree.")

    h: list[int] = []
    start = n
    while True:
        for m in range(start, 0, -1):
            if value := oracle.query_prefix(h + [m]):
                break
        else:
            raise ReducibleCharacter(f"χ({h} + [m]) vanishes for every m <= {start}.")

        h.append(m)
        d.append(value)

        placed = sum(h)
        if placed == n or m <= 2:
            break

        # Next hook is at least 2 shorter and must fit into what is left.
        start = min(m - 2, n - placed)

    debug(f"Hook search done: h={h}, d={d} after {oracle.queries_made} queries.")
    return tuple(h), tuple(d)


def run_c(
    oracle: CharacterOracle, h: tuple[int, ...], d: tuple[int, ...]
) -> tuple[int, ...]:
    """Content sums c_i = binom(n - h_1 - ... - h_{i-1}, 2) χ([h_1, ..., h_{i-1}, 2]) / d_i.

    Raises:
        ReducibleCharacter: when a division leaves a remainder.
    """

    n = oracle.n
    c = []
    for i in range(len(h)):
        if i == len(h) - 1 and h[i] == 1:
            c.append(0)
            continue

        remaining = n - sum(h[:i])
        numerator = binom2(remaining) * oracle.query_prefix(h[:i] + (2,))
        quotient, remainder = divmod(numerator, d[i])
        if remainder:
            raise ReducibleCharacter(
                f"c_{i + 1} = {numerator}/{d[i]} is not an integer."
            )
        c.append(quotient)

    return tuple(c)


def symbol_from_hc(
    n: int,
    h: tuple[int, ...],
    c: tuple[int, ...],
    d: tuple[int, ...],
    bracket: BracketForm = BracketForm.WIDE,
) -> CharSymbol:
    """Solves the arm recursion from the innermost hook outwards.

    Divisions are exact rationals; a non-integral arm leaves the symbol
    invalid rather than raising."""

    k = len(h)
    if any(length <= 0 for length in h):
        raise ValueError(f"Hook lengths must be positive, got {h}.")
    if not k:
        return CharSymbol(n=n, h=(), d=tuple(d), c=(), a=(), b=())

    a: list[Number] = [0] * k
    a[k - 1] = _integral(Fraction(c[k - 1] + binom2(h[k - 1]), h[k - 1]))

    for i in range(k - 2, -1, -1):
        nxt = a[i + 1]
        gap = h[i] - h[i + 1]
        term = (
            c[i]
            - c[i + 1]
            - binom2(nxt + 1)
            + binom2(h[i + 1] - nxt)
            + binom2(gap + bracket.offset)
            + (h[i + 1] - nxt - 1) * gap
        )
        a[i] = _integral(nxt + Fraction(term) / h[i])

    b = tuple(_integral(length - arm - 1) for length, arm in zip(h, a))
    return CharSymbol(n=n, h=tuple(h), d=tuple(d), c=tuple(c), a=tuple(a), b=b)


def compute_symbol(
    oracle: CharacterOracle, bracket: BracketForm = BracketForm.WIDE
) -> CharSymbol:
    """Runs the whole query sequence against `oracle`.

    Raises:
        ReducibleCharacter: on an early rejection.
    """

    h, d = run_hd(oracle)
    c = run_c(oracle, h, d)
    return symbol_from_hc(oracle.n, h, c, d, bracket)


def resolve_symbol(symbol: CharSymbol) -> Union[Partition, NotIrreducible]:
    if problems := symbol.problems():
        return NotIrreducible(reason="; ".join(problems), symbol=symbol)
    return from_frobenius(symbol.frobenius)


def identify_character(
    oracle: CharacterOracle, bracket: BracketForm = BracketForm.WIDE
) -> Union[Partition, NotIrreducible]:
    """The partition λ with χ = χ_λ, or NotIrreducible.

    Only correct when the oracle's character is irreducible."""

    try:
        symbol = compute_symbol(oracle, bracket)
    except ReducibleCharacter as exc:
        return NotIrreducible(reason=str(exc))

    return resolve_symbol(symbol)


def query_upper_bound(n: int, last_hook: int) -> int:
    """Most distinct values a run needs, given its last principal hook."""

    if last_hook < 1:
        raise ValueError(f"Hook lengths are positive, got {last_hook}.")
    if last_hook >= 3:
        return n - last_hook + 3
    return n
