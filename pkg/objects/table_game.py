"""The covered character table game.

Every entry of the S_n character table is hidden behind a row and a column
shuffle. Entries are uncovered one at a time until every row is labelled with
its character and every column with its class. For n > 6 the hook rows are
found first (Steps 1-5), their values label the columns, and with the columns
known each row is identified from at most n of its own entries.

Scan orders are fixed so a seed reproduces the exact query counts: rows are
scanned top-down and columns left-to-right, both in hidden index order.
"""
import itertools
import math
import time
from contextlib import contextmanager
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from typing import Iterator
from typing import Optional

from config import conf
from const import BRUTE_FORCE_MAX_N
from const import GameStep
from const import UNIDENTIFIABLE_N
from errors import CorruptTable
from errors import NotAClass
from errors import Unidentifiable
from helpers.rng import shuffled
from helpers.rng import SplitMix64
from logger import debug
from logger import error
from logger import info
from objects.char_id import identify_character
from objects.char_id import NotIrreducible
from objects.charvalues import character_table
from objects.charvalues import character_value
from objects.charvalues import CharTable
from objects.class_id import class_from_xi_prefix
from objects.class_id import xi_prefix_length
from objects.class_id import XiPrefix
from objects.oracle import CallbackOracle
from objects.partitions import enumerate_partitions
from objects.partitions import Partition
from objects.partitions import partition_count


class CoveredTable:
    """A shuffled S_n character table whose entries start out hidden."""

    def __init__(self, n: int, seed: int, table_limit: Optional[int] = None) -> None:
        self.n = n
        self.seed = seed
        self.labels = tuple(enumerate_partitions(n))
        self.size = len(self.labels)

        rng = SplitMix64(seed)
        # hidden index -> canonical index
        self._row_perm = shuffled(self.size, rng)
        self._col_perm = shuffled(self.size, rng)

        limit = conf.table_limit if table_limit is None else table_limit
        self._table: Optional[CharTable] = (
            character_table(n, limit) if n <= limit else None
        )

        self._values: dict[tuple[int, int], int] = {}

    @property
    def uncovered(self) -> frozenset[tuple[int, int]]:
        return frozenset(self._values)

    @property
    def query_count(self) -> int:
        return len(self._values)

    def query(self, row: int, col: int) -> int:
        """Uncovers T[row][col]. Uncovering twice is free."""

        if (value := self._values.get((row, col))) is not None:
            return value

        if not (0 <= row < self.size and 0 <= col < self.size):
            raise IndexError(f"({row}, {col}) is outside the {self.size}x{self.size} table.")

        r, c = self._row_perm[row], self._col_perm[col]
        if self._table is not None:
            value = self._table.values[r][c]
        else:
            value = character_value(self.labels[r], self.labels[c])

        self._values[(row, col)] = value
        return value

    def hidden_row_label(self, row: int) -> Partition:
        """The answer for `row`. Only for checking a finished game."""

        return self.labels[self._row_perm[row]]

    def hidden_col_label(self, col: int) -> Partition:
        return self.labels[self._col_perm[col]]


def uncovering_bound(n: int) -> int:
    """Entries the game may uncover: ⌊n/2⌋p_n + 7p_n + n for the classes plus
    n p_n for the characters. For n <= 5 the whole table."""

    p_n = partition_count(n)
    if n <= BRUTE_FORCE_MAX_N:
        return p_n * p_n
    return (n // 2) * p_n + 7 * p_n + n + n * p_n


def bound_fraction(n: int) -> Fraction:
    return Fraction(uncovering_bound(n), partition_count(n) ** 2)


@dataclass
class GameResult:
    n: int
    seed: int
    row_labels: dict[int, Partition]
    col_labels: dict[int, Partition]
    uncovered_count: int
    steps: dict[GameStep, int] = field(default_factory=dict)
    ok: bool = False
    time_taken: float = 0.0

    @property
    def p_n(self) -> int:
        return partition_count(self.n)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.uncovered_count, self.p_n**2)

    @property
    def bound(self) -> int:
        return uncovering_bound(self.n)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "p_n": self.p_n,
            "seed": self.seed,
            "uncovered": self.uncovered_count,
            "bound": self.bound,
            "fraction": float(self.fraction),
            "fraction_exact": str(self.fraction),
            "steps": {step.key: count for step, count in self.steps.items()},
            "ok": self.ok,
        }


@dataclass(frozen=True)
class BasicColumns:
    """Rows of ξ_1 and ξ_{n-2}, and the columns of (1 2), (1 2 3) and
    (1 2)(3 4)."""

    xi_one: int
    xi_partner: int
    b: int
    c: int
    d: int


def locate_identity_column(t: CoveredTable) -> int:
    """Uncovers whole rows until one is non-linear; its unique maximum sits in
    the identity column."""

    for row in range(t.size):
        values = [t.query(row, col) for col in range(t.size)]
        if all(abs(value) == 1 for value in values):
            continue

        top = max(values)
        positions = [col for col, value in enumerate(values) if value == top]
        if len(positions) != 1:
            raise CorruptTable(f"Row {row} is non-linear without a unique maximum.")

        debug(f"Identity column is {positions[0]}, found on row {row}.")
        return positions[0]

    raise CorruptTable("Every row is a linear character.")


def locate_degree_rows(t: CoveredTable, a: int) -> tuple[int, int]:
    """The two rows of degree n - 1."""

    rows = [row for row in range(t.size) if t.query(row, a) == t.n - 1]
    if len(rows) != 2:
        raise CorruptTable(f"Expected two characters of degree {t.n - 1}, found {len(rows)}.")

    return rows[0], rows[1]


def locate_basic_columns(t: CoveredTable, a: int, rows: tuple[int, int]) -> BasicColumns:
    """Scans row r for |values| n-3, n-4 and twice n-5, which on ξ_1 and
    ξ_{n-2} single out the classes with n-2, n-3 and n-4 fixed points."""

    n = t.n
    r, s = rows
    wanted = {n - 3: 1, n - 4: 1, n - 5: 2}
    seen: dict[int, list[int]] = {size: [] for size in wanted}

    for col in range(t.size):
        if col == a:
            continue
        size = abs(t.query(r, col))
        if size in seen:
            seen[size].append(col)
        if all(len(seen[size]) >= count for size, count in wanted.items()):
            break
    else:
        raise CorruptTable(f"Row {r} lacks the values of a degree {n - 1} hook.")

    b, c = seen[n - 3][0], seen[n - 4][0]
    j3, j4 = seen[n - 5][:2]

    xi_one = r if t.query(r, b) > 0 else s
    partner = s if xi_one == r else r

    # ξ_{n-2} is positive on (2,2,1,...) and negative on (4,1,...).
    d = j3 if t.query(partner, j3) > 0 else j4

    return BasicColumns(xi_one=xi_one, xi_partner=partner, b=b, c=c, d=d)


def locate_hook_rows(t: CoveredTable, a: int, c: int, d: int) -> list[int]:
    """Rows with χ(1) = 4χ((1 2 3)) - 3χ((1 2)(3 4)), which are exactly the
    hooks, in scan order until all n are found."""

    hooks = []
    for row in range(t.size):
        if t.query(row, a) == 4 * t.query(row, c) - 3 * t.query(row, d):
            hooks.append(row)
            if len(hooks) == t.n:
                return hooks

    raise CorruptTable(f"Only {len(hooks)} hook rows found, expected {t.n}.")


def order_hook_rows(
    t: CoveredTable,
    hooks: list[int],
    a: int,
    b: int,
    known: Optional[dict[int, int]] = None,
) -> list[int]:
    """Sorts the hook rows by f(i) = binom(n, 2) χ_i((1 2)) / χ_i(1), the
    first content sum, which falls strictly from ξ_0 to ξ_{n-1}.

    `known` holds column-b values already deduced without uncovering."""

    known = known or {}
    pairs = math.comb(t.n, 2)

    scores = {}
    for row in hooks:
        value = known[row] if row in known else t.query(row, b)
        scores[row] = Fraction(pairs * value, t.query(row, a))

    ordered = sorted(hooks, key=scores.__getitem__, reverse=True)
    for first, second in zip(ordered, ordered[1:]):
        if scores[first] == scores[second]:
            raise CorruptTable(f"Hook rows {first} and {second} tie at f = {scores[first]}.")

    return ordered


def identify_classes(t: CoveredTable, hook_rows: list[int]) -> dict[int, Partition]:
    """Labels every column from its values on ξ_{n-1}, ξ_{n-2}, ...

    `hook_rows[k]` is the row of ξ_k."""

    n = t.n
    rows = [hook_rows[n - 1 - x] for x in range(xi_prefix_length(n))]

    labels = {}
    for col in range(t.size):
        prefix = XiPrefix(n=n, values=tuple(t.query(row, col) for row in rows))
        try:
            labels[col] = class_from_xi_prefix(prefix)
        except NotAClass as exc:
            raise CorruptTable(f"Column {col} is not a class: {exc}")

    if len(set(labels.values())) != t.size:
        raise CorruptTable("Two columns received the same class.")

    return labels


def identify_characters(t: CoveredTable, col_labels: dict[int, Partition]) -> dict[int, Partition]:
    """Runs a character identification on every row, reading values through
    the now labelled columns."""

    column_of = {label: col for col, label in col_labels.items()}

    labels = {}
    for row in range(t.size):
        oracle = CallbackOracle(t.n, lambda mu, row=row: t.query(row, column_of[mu]))
        result = identify_character(oracle)
        if isinstance(result, NotIrreducible):
            raise CorruptTable(f"Row {row} is not irreducible: {result.reason}")
        labels[row] = result

    if len(set(labels.values())) != t.size:
        raise CorruptTable("Two rows identified as the same character.")

    return labels


def _brute_force(t: CoveredTable) -> tuple[dict[int, Partition], dict[int, Partition]]:
    """Uncovers everything and matches against the computed table, trying
    every column assignment.

    That is p_n! assignments, 5040 at n = 5 but 15! at n = 7,
    so `BRUTE_FORCE_MAX_N` has to stay at 5.
    """

    if t.n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"Brute force would try {t.size}! labellings of S_{t.n}.")

    canonical = character_table(t.n, max(t.n, conf.table_limit))
    by_row = {values: label for label, values in zip(canonical.rows, canonical.values)}
    observed = [[t.query(row, col) for col in range(t.size)] for row in range(t.size)]

    solutions = set()
    for cols in itertools.permutations(range(t.size)):
        # cols[k] is the hidden column of canonical class k
        signatures = [tuple(values[col] for col in cols) for values in observed]
        if not all(signature in by_row for signature in signatures):
            continue
        if len(set(signatures)) != t.size:
            continue

        rows = tuple(by_row[signature] for signature in signatures)
        columns = tuple(sorted(zip(cols, canonical.cols)))
        solutions.add((rows, columns))

    if len(solutions) != 1:
        raise Unidentifiable(f"S_{t.n} table matches {len(solutions)} labellings.")

    rows, columns = solutions.pop()
    return dict(enumerate(rows)), dict(columns)


@contextmanager
def _tally(t: CoveredTable, steps: dict[GameStep, int], step: GameStep) -> Iterator[None]:
    before = t.query_count
    yield
    steps[step] = t.query_count - before
    debug(f"{step.key}: {steps[step]} entries (allowed {step.bound(t.n, t.size)}).")


def play_game(n: int, seed: int, table_limit: Optional[int] = None) -> GameResult:
    """Plays one covered table game and checks the answer against the hidden
    shuffle.

    Raises:
        Unidentifiable: for n = 4 and n = 6.
    """

    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}.")
    if n in UNIDENTIFIABLE_N:
        raise Unidentifiable(f"The S_{n} table cannot be identified from its entries.")

    start_time = time.time()
    t = CoveredTable(n, seed, table_limit)
    steps: dict[GameStep, int] = {}

    if n <= BRUTE_FORCE_MAX_N:
        with _tally(t, steps, GameStep.BRUTE_FORCE):
            row_labels, col_labels = _brute_force(t)
    else:
        with _tally(t, steps, GameStep.LOCATE_IDENTITY_COLUMN):
            a = locate_identity_column(t)
        with _tally(t, steps, GameStep.LOCATE_DEGREE_ROWS):
            rows = locate_degree_rows(t, a)
        with _tally(t, steps, GameStep.LOCATE_BASIC_COLUMNS):
            basic = locate_basic_columns(t, a, rows)
        with _tally(t, steps, GameStep.LOCATE_HOOK_ROWS):
            hooks = locate_hook_rows(t, a, basic.c, basic.d)
        with _tally(t, steps, GameStep.ORDER_HOOK_ROWS):
            known = {basic.xi_one: n - 3, basic.xi_partner: -(n - 3)}
            hook_rows = order_hook_rows(t, hooks, a, basic.b, known)
        with _tally(t, steps, GameStep.IDENTIFY_CLASSES):
            col_labels = identify_classes(t, hook_rows)
        with _tally(t, steps, GameStep.IDENTIFY_CHARACTERS):
            row_labels = identify_characters(t, col_labels)

        for k, row in enumerate(hook_rows):
            if row_labels[row] != Partition((n - k,) + (1,) * k):
                raise CorruptTable(f"Row {row} was ordered as ξ_{k} but is χ_{row_labels[row]}.")

    result = GameResult(
        n=n,
        seed=seed,
        row_labels=row_labels,
        col_labels=col_labels,
        uncovered_count=t.query_count,
        steps=steps,
        time_taken=(time.time() - start_time) * 1000,
    )
    result.ok = all(
        row_labels[i] == t.hidden_row_label(i) for i in range(t.size)
    ) and all(col_labels[j] == t.hidden_col_label(j) for j in range(t.size))

    if result.ok:
        info(
            f"S_{n} game (seed {seed}): uncovered {result.uncovered_count}/{t.size ** 2} "
            f"entries, bound {result.bound}, u = {float(result.fraction):.4f} "
            f"({result.time_taken:.2f}ms)"
        )
    else:
        error(f"S_{n} game (seed {seed}) produced labels that disagree with the table!")

    return result
