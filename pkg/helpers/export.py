# Reading and writing tables and run summaries.
import csv
from pathlib import Path
from typing import Any
from typing import Iterable
from typing import Union

import orjson

from errors import InvalidPartition
from errors import UnreadableTable
from objects.charvalues import CharTable
from objects.partitions import Partition

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1

STATS_COLUMNS = ("n", "p_n", "uncovered", "bound", "fraction", "seed")

PathLike = Union[str, Path]


def jsonable(value: Any) -> Any:
    """Recursively swaps integers orjson cannot hold for their decimal text."""

    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        if INT64_MIN <= value <= INT64_MAX:
            return value
        return str(value)
    if isinstance(value, Partition):
        return str(value)
    if isinstance(value, dict):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(item) for item in value]
    return value


def dumps(value: Any, pretty: bool = False) -> str:
    option = orjson.OPT_INDENT_2 if pretty else 0
    return orjson.dumps(jsonable(value), option=option).decode()


def write_json(path: PathLike, value: Any) -> None:
    with open(path, "wb") as f:
        f.write(orjson.dumps(jsonable(value), option=orjson.OPT_INDENT_2))


def table_as_dict(table: CharTable) -> dict:
    return {
        "n": table.n,
        "rows": [str(label) for label in table.rows],
        "cols": [str(label) for label in table.cols],
        "values": [list(row) for row in table.values],
    }


def write_table_csv(path: PathLike, table: CharTable) -> None:
    """Header `,<class labels...>`, then `<character label>,<values...>`."""

    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow([""] + [str(label) for label in table.cols])
        for label, values in zip(table.rows, table.values):
            writer.writerow([str(label)] + list(values))


def read_table_csv(path: PathLike) -> tuple[int, dict[Partition, dict[Partition, int]]]:
    """Loads a table written by `write_table_csv`.

    Returns n and, for each character label, its values keyed by class.

    Raises:
        UnreadableTable: on unparsable labels or values, or mixed n.
    """

    with open(path, newline="", encoding="utf-8") as f:
        rows = list(csv.reader(f))

    if not rows:
        raise UnreadableTable(f"{path} is empty.")

    try:
        cols = [Partition.parse(label) for label in rows[0][1:]]
        table = {}
        for row in rows[1:]:
            if not row:
                continue
            if len(row) != len(cols) + 1:
                raise UnreadableTable(f"Row {row[0]!r} has {len(row) - 1} values, expected {len(cols)}.")
            table[Partition.parse(row[0])] = {
                col: int(value) for col, value in zip(cols, row[1:])
            }
    except (InvalidPartition, ValueError) as exc:
        raise UnreadableTable(f"Could not read {path}: {exc}")

    weights = {label.weight for label in cols} | {label.weight for label in table}
    if len(weights) != 1:
        raise UnreadableTable(f"{path} mixes partitions of {sorted(weights)}.")

    return weights.pop(), table


def write_stats_csv(path: PathLike, records: Iterable[dict]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=STATS_COLUMNS, extrasaction="ignore")
        writer.writeheader()
        for record in records:
            writer.writerow(record)
