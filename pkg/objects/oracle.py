# Sources of character values for identification runs.
from abc import ABC
from abc import abstractmethod
from typing import Callable
from typing import Iterable
from typing import Mapping
from typing import TextIO

from const import AnswerSource
from errors import NotACharacter
from errors import ProtocolError
from errors import UnreadableTable
from helpers.protocol import format_query
from helpers.protocol import parse_answer
from logger import debug
from objects.charvalues import character_value
from objects.partitions import pad
from objects.partitions import Partition
from objects.partitions import require_weight


class CharacterOracle(ABC):
    """Answers χ(μ) for one fixed character χ of S_n. Repeated questions are
    served from the log and cost nothing."""

    def __init__(self, n: int) -> None:
        if n < 1:
            raise ValueError(f"Oracles need n >= 1, got {n}.")

        self.n = n
        self.queries_made = 0
        self.log: list[tuple[Partition, int]] = []
        self._answers: dict[Partition, int] = {}

    @abstractmethod
    def _answer(self, cycle_type: Partition) -> int:
        """Produces a fresh value. Only called once per cycle type."""

    def query(self, cycle_type: Partition) -> int:
        require_weight(cycle_type, self.n)

        if cycle_type in self._answers:
            value = self._answers[cycle_type]
            source = AnswerSource.LOG
        else:
            value = self._answer(cycle_type)
            if not isinstance(value, int) or isinstance(value, bool):
                raise NotACharacter(f"Oracle answered {value!r} at {cycle_type}.")

            self._answers[cycle_type] = value
            self.log.append((cycle_type, value))
            self.queries_made += 1
            source = AnswerSource.QUERY

        debug(f"χ({cycle_type}) = {value} [{source.console_text}]")
        return value

    def query_prefix(self, prefix: Iterable[int]) -> int:
        """χ([ν]): the cycles in `prefix` with fixed points appended."""

        return self.query(pad(prefix, self.n))


class MNOracle(CharacterOracle):
    """χ_λ evaluated by the Murnaghan-Nakayama rule."""

    def __init__(self, partition: Partition) -> None:
        super().__init__(partition.weight)
        self.partition = partition

    def _answer(self, cycle_type: Partition) -> int:
        return character_value(self.partition, cycle_type)


class SumOracle(CharacterOracle):
    """Pointwise sum of irreducible characters, a reducible character when
    more than one summand is given."""

    def __init__(self, summands: Iterable[Partition]) -> None:
        self.summands = tuple(summands)
        if not self.summands:
            raise ValueError("A sum oracle needs at least one summand.")

        n = self.summands[0].weight
        for summand in self.summands:
            require_weight(summand, n)
        super().__init__(n)

    def _answer(self, cycle_type: Partition) -> int:
        return sum(character_value(summand, cycle_type) for summand in self.summands)


class TableOracle(CharacterOracle):
    """Reads values from a mapping of cycle types to values, e.g. one row of a
    table file."""

    def __init__(self, n: int, row: Mapping[Partition, int]) -> None:
        super().__init__(n)
        self.row = row

    def _answer(self, cycle_type: Partition) -> int:
        try:
            return self.row[cycle_type]
        except KeyError:
            raise UnreadableTable(f"The table has no column for class {cycle_type}.")


class CallbackOracle(CharacterOracle):
    """Delegates to a function, e.g. a lookup into a covered table."""

    def __init__(self, n: int, callback: Callable[[Partition], int]) -> None:
        super().__init__(n)
        self.callback = callback

    def _answer(self, cycle_type: Partition) -> int:
        return self.callback(cycle_type)


class ExternalOracle(CharacterOracle):
    """Asks a peer process over the line protocol in `helpers.protocol`."""

    def __init__(self, n: int, reader: TextIO, writer: TextIO) -> None:
        super().__init__(n)
        self.reader = reader
        self.writer = writer

    def _answer(self, cycle_type: Partition) -> int:
        try:
            self.writer.write(format_query(cycle_type))
            self.writer.flush()
            line = self.reader.readline()
        except OSError as exc:
            raise ProtocolError(f"Lost the peer while asking for {cycle_type}: {exc}")

        return parse_answer(line)
