import asyncio
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from functools import wraps
from typing import Callable

import click

from const import ExitCode
from const import OracleMode
from const import UNIDENTIFIABLE_N
from errors import CorruptTable
from errors import ProtocolError
from errors import ReducibleCharacter
from errors import UncoverError
from helpers import export
from helpers.protocol import format_result
from helpers.verify import run_check
from logger import error
from logger import info
from objects.char_id import compute_symbol
from objects.char_id import NotIrreducible
from objects.char_id import query_upper_bound
from objects.char_id import resolve_symbol
from objects.charvalues import character_table
from objects.charvalues import character_value
from objects.charvalues import degree
from objects.charvalues import xi_values
from objects.class_id import class_from_xi_prefix
from objects.class_id import XiPrefix
from objects.oracle import CharacterOracle
from objects.oracle import ExternalOracle
from objects.oracle import MNOracle
from objects.oracle import SumOracle
from objects.oracle import TableOracle
from objects.run_config import RunConfig
from objects.table_game import play_game

Handler = Callable[[RunConfig], ExitCode]


def exit_codes(handler: Handler) -> Handler:
    """Turns the package's exceptions into exit codes. Anything else is a bug
    and propagates."""

    @wraps(handler)
    def wrapper(config: RunConfig) -> ExitCode:
        try:
            return handler(config)
        except ProtocolError as exc:
            error(f"{config.subcommand}: protocol error: {exc}")
            return ExitCode.PROTOCOL
        except CorruptTable as exc:
            error(f"{config.subcommand}: {exc}")
            return ExitCode.VERIFY_FAILED
        except (UncoverError, ValueError) as exc:
            error(f"{config.subcommand}: {exc}")
            return ExitCode.USAGE

    return wrapper


@exit_codes
def cmd_eval(config: RunConfig) -> ExitCode:
    click.echo(character_value(config.partition("lambda"), config.partition("mu")))
    return ExitCode.OK


@exit_codes
def cmd_degree(config: RunConfig) -> ExitCode:
    click.echo(degree(config.partition("lambda")))
    return ExitCode.OK


@exit_codes
def cmd_xi(config: RunConfig) -> ExitCode:
    values = xi_values(config.n, config.partition("nu"))
    click.echo(",".join(map(str, values)))
    return ExitCode.OK


@exit_codes
def cmd_table(config: RunConfig) -> ExitCode:
    table = character_table(config.n, config.table_limit)

    if config.csv_path is not None:
        export.write_table_csv(config.csv_path, table)
        info(f"Wrote the S_{config.n} table to {config.csv_path}")
    if config.json_path is not None:
        export.write_json(config.json_path, export.table_as_dict(table))
        info(f"Wrote the S_{config.n} table to {config.json_path}")

    if config.csv_path is None and config.json_path is None:
        click.echo("," + ",".join(f'"{label}"' for label in table.cols))
        for label, values in zip(table.rows, table.values):
            click.echo(f'"{label}",' + ",".join(map(str, values)))

    return ExitCode.OK


def _build_oracle(config: RunConfig) -> CharacterOracle:
    if config.oracle is OracleMode.EXTERNAL:
        return ExternalOracle(config.n, sys.stdin, sys.stdout)

    if config.oracle is OracleMode.TABLE_FILE:
        if config.table_file is None or config.row is None:
            raise ValueError("--oracle table-file needs --table-file and --row.")

        n, table = export.read_table_csv(config.table_file)
        if n != config.n:
            raise ValueError(f"{config.table_file} is a table of S_{n}, not S_{config.n}.")
        if config.row not in table:
            raise ValueError(f"{config.table_file} has no row {config.row}.")

        return TableOracle(n, table[config.row])

    if config.summands:
        return SumOracle(config.summands)
    if "simulate" in config.partitions:
        return MNOracle(config.partition("simulate"))

    raise ValueError("Nothing to identify: pass --simulate, --simulate-sum or an --oracle.")


@exit_codes
def cmd_identify_char(config: RunConfig) -> ExitCode:
    oracle = _build_oracle(config)

    start_time = time.time()
    symbol = None
    try:
        symbol = compute_symbol(oracle)
        result = resolve_symbol(symbol)
    except ReducibleCharacter as exc:
        result = NotIrreducible(reason=str(exc))

    identified = None if isinstance(result, NotIrreducible) else result
    summary = {
        "n": config.n,
        "result": str(identified) if identified is not None else "NOT_IRREDUCIBLE",
        "queries": oracle.queries_made,
        "bound": query_upper_bound(config.n, symbol.h[-1]) if symbol and symbol.h else None,
        "log": [[str(cycle_type), value] for cycle_type, value in oracle.log],
        "symbol": symbol.as_dict() if symbol is not None else None,
    }

    if isinstance(result, NotIrreducible):
        info(f"Character is not irreducible: {result.reason}")
    else:
        info(
            f"Identified χ_{identified} with {oracle.queries_made} queries "
            f"({(time.time() - start_time) * 1000:.2f}ms)"
        )

    if config.oracle is OracleMode.EXTERNAL:
        sys.stdout.write(format_result(identified))
        sys.stdout.write(export.dumps(summary) + "\n")
        sys.stdout.flush()
    else:
        click.echo(summary["result"])
        click.echo(export.dumps(summary))

    return ExitCode.OK


@exit_codes
def cmd_identify_class(config: RunConfig) -> ExitCode:
    cycle_type = class_from_xi_prefix(XiPrefix(n=config.n, values=config.xi))

    click.echo(str(cycle_type))
    click.echo(export.dumps({"n": config.n, "xi": list(config.xi), "class": str(cycle_type)}))
    return ExitCode.OK


@exit_codes
def cmd_table_game(config: RunConfig) -> ExitCode:
    result = play_game(config.n, config.seed, config.table_limit)
    record = result.as_dict()

    click.echo(
        f"S_{result.n}, seed {result.seed}: uncovered {result.uncovered_count} of "
        f"{result.p_n ** 2} entries (bound {result.bound}, u = {record['fraction']:.4f})"
    )
    for step, count in result.steps.items():
        click.echo(f"  {step.key:<24} {count:>8}  (at most {step.bound(result.n, result.p_n)})")
    click.echo("  labels match the hidden shuffle" if result.ok else "  LABELS DISAGREE")

    if config.json_path is not None:
        export.write_json(config.json_path, record)

    return ExitCode.OK if result.ok else ExitCode.VERIFY_FAILED


def game_record(n: int, seed: int, table_limit: int) -> dict:
    """One `stats` row, run inside the worker pool."""

    return play_game(n, seed, table_limit).as_dict()


async def _run_games(config: RunConfig, jobs: list[tuple[int, int]]) -> list[dict]:
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        tasks = [
            loop.run_in_executor(pool, game_record, n, seed, config.table_limit)
            for n, seed in jobs
        ]
        return await asyncio.gather(*tasks)


@exit_codes
def cmd_stats(config: RunConfig) -> ExitCode:
    if config.n_from > config.n_to:
        raise ValueError(f"--n-from {config.n_from} is above --n-to {config.n_to}.")

    jobs = [
        (n, config.seed + offset)
        for n in range(config.n_from, config.n_to + 1)
        if n not in UNIDENTIFIABLE_N
        for offset in range(config.seeds)
    ]

    start_time = time.time()
    if config.workers > 1:
        records = asyncio.run(_run_games(config, jobs))
    else:
        records = [game_record(n, seed, config.table_limit) for n, seed in jobs]
    info(f"Played {len(records)} games in {time.time() - start_time:.2f}s.")

    if config.csv_path is not None:
        export.write_stats_csv(config.csv_path, records)
    else:
        click.echo(",".join(export.STATS_COLUMNS))
        for record in records:
            click.echo(",".join(str(record[column]) for column in export.STATS_COLUMNS))

    if not all(record["ok"] for record in records):
        error("Some games finished with labels that disagree with the hidden shuffle.")
        return ExitCode.VERIFY_FAILED

    return ExitCode.OK


@exit_codes
def cmd_verify(config: RunConfig) -> ExitCode:
    reports = run_check(config.check, config.max_n, config.table_limit)

    for report in reports:
        status = "PASS" if report.passed else "FAIL"
        line = f"n={report.n:<3} {status}"
        if report.found:
            line += "  " + " ".join(f"({p})" for p in report.found)
        if report.note:
            line += f"  [{report.note}]"
        click.echo(line)

    if config.json_path is not None:
        export.write_json(config.json_path, [report.as_dict() for report in reports])

    failed = [report.n for report in reports if not report.passed]
    if failed:
        error(f"Verification failed for n = {', '.join(map(str, failed))}")
        return ExitCode.VERIFY_FAILED

    return ExitCode.OK
