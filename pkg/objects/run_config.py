from dataclasses import dataclass
from dataclasses import field
from pathlib import Path
from typing import Optional

from const import OracleMode
from errors import WeightMismatch
from objects.partitions import Partition


@dataclass
class RunConfig:
    """Everything one CLI invocation needs, after flags and the config file
    have been merged."""

    subcommand: str
    check: str = ""
    n: Optional[int] = None
    partitions: dict[str, Partition] = field(default_factory=dict)
    summands: tuple[Partition, ...] = ()
    seed: int = 0
    table_limit: int = 16
    oracle: OracleMode = OracleMode.MN
    table_file: Optional[Path] = None
    row: Optional[Partition] = None
    xi: tuple[int, ...] = ()
    csv_path: Optional[Path] = None
    json_path: Optional[Path] = None
    max_n: int = 10
    n_from: int = 7
    n_to: int = 12
    seeds: int = 5
    workers: int = 1

    def __post_init__(self) -> None:
        if self.n is not None and self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}.")

        if self.n is None:
            return

        for name, partition in self.partitions.items():
            if partition.weight != self.n:
                raise WeightMismatch(
                    f"--{name} {partition} is a partition of {partition.weight}, not {self.n}."
                )
        for summand in self.summands:
            if summand.weight != self.n:
                raise WeightMismatch(
                    f"Summand {summand} is a partition of {summand.weight}, not {self.n}."
                )

    def partition(self, name: str) -> Partition:
        return self.partitions[name]
