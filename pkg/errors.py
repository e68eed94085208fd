"""Exceptions raised across the package. Handlers map them to exit codes."""


class UncoverError(Exception):
    """Base class of every error raised by this package."""


class InvalidPartition(UncoverError, ValueError):
    """A sequence is not a weakly decreasing sequence of positive integers."""


class OutsideDiagram(UncoverError, IndexError):
    """A box (i, j) does not belong to the diagram it was looked up in."""


class InvalidSymbol(UncoverError, ValueError):
    """A Frobenius symbol violates the strictly decreasing/nonnegative rule."""


class WeightMismatch(UncoverError, ValueError):
    """Two partitions (or a partition and n) disagree on their weight."""


class TableTooLarge(UncoverError):
    """A full character table was requested above the configured limit."""


class NotACharacter(UncoverError):
    """An oracle answered with values no character of S_n can take."""


class ReducibleCharacter(UncoverError):
    """Early exit of an identification run: the character is not irreducible."""


class NotAClass(UncoverError):
    """A hook-character prefix does not come from any cycle type."""


class CorruptTable(UncoverError):
    """A covered table contradicts the structure of an S_n character table."""


class UnreadableTable(UncoverError, ValueError):
    """A table file cannot be parsed or lacks the column of some class."""


class Unidentifiable(UncoverError):
    """The covered table game cannot be won for this n."""


class ProtocolError(UncoverError):
    """The external oracle peer broke the line protocol."""
