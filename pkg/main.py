#!/usr/bin/env python3.9
from pathlib import Path
from typing import Optional

import click

import handlers
from config import conf
from const import ExitCode
from const import OracleMode
from errors import InvalidPartition
from logger import debug
from logger import set_debug
from objects.partitions import Partition
from objects.run_config import RunConfig

__version__ = "0.1.0"


class PartitionType(click.ParamType):
    """Comma separated parts, e.g. `4,3,1`."""

    name = "partition"

    def convert(self, value, param, ctx) -> Partition:
        if isinstance(value, Partition):
            return value
        try:
            return Partition.parse(value)
        except InvalidPartition as exc:
            self.fail(str(exc), param, ctx)


class IntListType(click.ParamType):
    name = "values"

    def convert(self, value, param, ctx) -> tuple[int, ...]:
        if isinstance(value, tuple):
            return value
        try:
            return tuple(int(chunk) for chunk in value.split(","))
        except ValueError:
            self.fail(f"{value!r} is not a comma separated list of integers.", param, ctx)


PARTITION = PartitionType()
INT_LIST = IntListType()


def _config(**kwargs) -> RunConfig:
    """Builds the run config, turning bad combinations into usage errors."""

    if kwargs.get("table_limit") is None:
        kwargs["table_limit"] = conf.table_limit
    try:
        config = RunConfig(**kwargs)
    except ValueError as exc:
        raise click.UsageError(str(exc))

    debug(f"Running with {config!r}")
    return config


def _run(handler, config: RunConfig) -> None:
    click.get_current_context().exit(int(handler(config)))


table_limit_option = click.option(
    "--table-limit",
    type=click.IntRange(min=1),
    default=None,
    help="Largest n whose full table may be built (config: table_limit).",
)


@click.group()
@click.version_option(__version__)
@click.option("--debug", "debug_mode", is_flag=True, help="Log every query to stderr.")
def cli(debug_mode: bool) -> None:
    """Identify characters and classes of S_n from a few table entries."""

    set_debug(debug_mode or conf.debug)


@cli.command("eval")
@click.option("--lambda", "lam", type=PARTITION, required=True)
@click.option("--mu", type=PARTITION, required=True)
def eval_command(lam: Partition, mu: Partition) -> None:
    """Print χ_λ(μ)."""

    _run(handlers.cmd_eval, _config(subcommand="eval", n=lam.weight, partitions={"lambda": lam, "mu": mu}))


@cli.command("degree")
@click.option("--lambda", "lam", type=PARTITION, required=True)
def degree_command(lam: Partition) -> None:
    """Print χ_λ(1)."""

    _run(handlers.cmd_degree, _config(subcommand="degree", n=lam.weight, partitions={"lambda": lam}))


@cli.command("xi")
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--nu", type=PARTITION, required=True)
def xi_command(n: int, nu: Partition) -> None:
    """Print ξ_{n,0}(ν), ..., ξ_{n,n-1}(ν)."""

    _run(handlers.cmd_xi, _config(subcommand="xi", n=n, partitions={"nu": nu}))


@cli.command("table")
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--json", "json_path", type=click.Path(dir_okay=False, path_type=Path))
@table_limit_option
def table_command(n: int, csv_path: Optional[Path], json_path: Optional[Path], table_limit: Optional[int]) -> None:
    """Compute the full character table of S_n."""

    _run(
        handlers.cmd_table,
        _config(subcommand="table", n=n, csv_path=csv_path, json_path=json_path, table_limit=table_limit),
    )


def _parse_sum(value: Optional[str]) -> tuple[Partition, ...]:
    if not value:
        return ()
    try:
        return tuple(Partition.parse(chunk) for chunk in value.split("+"))
    except InvalidPartition as exc:
        raise click.BadParameter(str(exc), param_hint="--simulate-sum")


@cli.command("identify-char")
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--simulate", type=PARTITION, help="Answer with χ_λ by Murnaghan-Nakayama.")
@click.option("--simulate-sum", help="Answer with a sum of characters, e.g. 2,1+3.")
@click.option(
    "--oracle",
    type=click.Choice([mode.value for mode in OracleMode]),
    default=OracleMode.MN.value,
    show_default=True,
)
@click.option("--table-file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--row", type=PARTITION, help="Row of --table-file to identify.")
def identify_char_command(
    n: int,
    simulate: Optional[Partition],
    simulate_sum: Optional[str],
    oracle: str,
    table_file: Optional[Path],
    row: Optional[Partition],
) -> None:
    """Identify an irreducible character from at most n of its values."""

    partitions = {"simulate": simulate} if simulate is not None else {}
    _run(
        handlers.cmd_identify_char,
        _config(
            subcommand="identify-char",
            n=n,
            partitions=partitions,
            summands=_parse_sum(simulate_sum),
            oracle=OracleMode(oracle),
            table_file=table_file,
            row=row,
        ),
    )


@cli.command("identify-class")
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--xi", type=INT_LIST, required=True, help="ξ_{n,n-1}(ν), ξ_{n,n-2}(ν), ...")
def identify_class_command(n: int, xi: tuple[int, ...]) -> None:
    """Identify a cycle type from its values on the top hook characters."""

    _run(handlers.cmd_identify_class, _config(subcommand="identify-class", n=n, xi=xi))


@cli.command("table-game")
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--seed", type=int, default=None, help="Shuffle seed (config: default_seed).")
@click.option("--json", "json_path", type=click.Path(dir_okay=False, path_type=Path))
@table_limit_option
def table_game_command(n: int, seed: Optional[int], json_path: Optional[Path], table_limit: Optional[int]) -> None:
    """Play the covered character table game once."""

    _run(
        handlers.cmd_table_game,
        _config(
            subcommand="table-game",
            n=n,
            seed=conf.default_seed if seed is None else seed,
            json_path=json_path,
            table_limit=table_limit,
        ),
    )


@cli.command("stats")
@click.option("--n-from", type=click.IntRange(min=1), default=7, show_default=True)
@click.option("--n-to", type=click.IntRange(min=1), default=12, show_default=True)
@click.option("--seeds", type=click.IntRange(min=1), default=5, show_default=True)
@click.option("--seed", type=int, default=None, help="First seed (config: default_seed).")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Worker processes (config: stats_workers).")
@table_limit_option
def stats_command(
    n_from: int,
    n_to: int,
    seeds: int,
    seed: Optional[int],
    csv_path: Optional[Path],
    workers: Optional[int],
    table_limit: Optional[int],
) -> None:
    """Play many games and report the uncovered fractions."""

    _run(
        handlers.cmd_stats,
        _config(
            subcommand="stats",
            n_from=n_from,
            n_to=n_to,
            seeds=seeds,
            seed=conf.default_seed if seed is None else seed,
            csv_path=csv_path,
            workers=conf.stats_workers if workers is None else workers,
            table_limit=table_limit,
        ),
    )


@cli.group("verify")
def verify_group() -> None:
    """Brute-force checks on small character tables."""


def _verify_command(name: str, summary: str) -> None:
    @verify_group.command(name, help=summary)
    @click.option("--max-n", type=click.IntRange(min=1), default=10, show_default=True)
    @click.option("--json", "json_path", type=click.Path(dir_okay=False, path_type=Path))
    @table_limit_option
    def command(max_n: int, json_path: Optional[Path], table_limit: Optional[int]) -> None:
        _run(
            handlers.cmd_verify,
            _config(subcommand="verify", check=name, max_n=max_n, json_path=json_path, table_limit=table_limit),
        )


_verify_command("sign-partitions", "Columns holding only 0 and ±1 with n nonzero entries.")
_verify_command("hook-degrees", "Hooks are the only characters of binomial degree.")
_verify_command("orthogonality", "Column orthogonality against centralizer orders.")


def main(argv: Optional[list[str]] = None) -> int:
    try:
        result = cli.main(args=argv, prog_name="uncover", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        return ExitCode.USAGE

    return int(result or 0)


if __name__ == "__main__":
    raise SystemExit(main())
