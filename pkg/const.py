from enum import Enum
from enum import IntEnum

from colorama import Fore


class ExitCode(IntEnum):
    """Process exit codes of the CLI."""

    OK = 0
    VERIFY_FAILED = 1
    USAGE = 2
    PROTOCOL = 3


class OracleMode(str, Enum):
    """Where an identification run gets its character values from."""

    MN = "mn"  # Murnaghan-Nakayama, simulated locally.
    TABLE_FILE = "table-file"
    EXTERNAL = "external"  # Line protocol over stdin/stdout.


ANSWER_COL = (
    Fore.BLUE,  # Query
    Fore.GREEN,  # Log
)

ANSWER_TEXT = ("Query", "Log")


class AnswerSource(IntEnum):
    """How an oracle answer was produced. Made mostly for logging purposes."""

    QUERY = 0  # Counted against the query budget.
    LOG = 1  # Served from the oracle's log, free.

    @property
    def colour(self) -> str:
        """Returns the colorama colour that should be used for the source."""

        return ANSWER_COL[self.value]

    @property
    def console_text(self) -> str:
        """Returns the text string to be used in logging."""

        return f"{self.colour}{ANSWER_TEXT[self.value]}{Fore.RESET}{Fore.WHITE}"


class BracketForm(IntEnum):
    """Binomial term of the descending arm recursion.

    WIDE uses binom(h_i - h_{i+1} + 1, 2), which reproduces the arms of every
    partition. NARROW uses binom(h_i - h_{i+1}, 2) and is kept only so the
    failing variant stays testable."""

    WIDE = 1
    NARROW = 0

    @property
    def offset(self) -> int:
        return self.value


class GameStep(IntEnum):
    """Phases of the covered table game, in the order they run."""

    BRUTE_FORCE = 0  # n <= 5 only: everything is uncovered.
    LOCATE_IDENTITY_COLUMN = 1
    LOCATE_DEGREE_ROWS = 2
    LOCATE_BASIC_COLUMNS = 3
    LOCATE_HOOK_ROWS = 4
    ORDER_HOOK_ROWS = 5
    IDENTIFY_CLASSES = 6
    IDENTIFY_CHARACTERS = 7

    @property
    def key(self) -> str:
        return self.name.lower()

    def bound(self, n: int, p_n: int) -> int:
        """Most entries this step may uncover for n > 6."""

        if self is GameStep.BRUTE_FORCE:
            return p_n * p_n
        if self is GameStep.LOCATE_IDENTITY_COLUMN:
            return 3 * p_n
        if self is GameStep.LOCATE_DEGREE_ROWS:
            return p_n - 1
        if self is GameStep.LOCATE_BASIC_COLUMNS:
            # p_n - 1 row entries plus one partner entry for the d column.
            return p_n
        if self is GameStep.LOCATE_HOOK_ROWS:
            return 2 * p_n - 2
        if self is GameStep.ORDER_HOOK_ROWS:
            return n - 2
        if self is GameStep.IDENTIFY_CLASSES:
            return (n // 2) * p_n
        return n * p_n


# Small n where the game has no solution at all.
UNIDENTIFIABLE_N = (4, 6)

# Largest n for which the game falls back to uncovering everything.
BRUTE_FORCE_MAX_N = 5

# Known exceptions to "hooks are the only characters of binomial degree".
HOOK_DEGREE_EXCEPTIONS = (6, 12, 15, 24, 35)
