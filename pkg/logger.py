import sys
import time

from colorama import Back
from colorama import Fore
from colorama import Style
from colorama import init as colorama_init


class Ansi:
    BLACK = Back.BLACK
    RED = Back.RED
    GREEN = Back.GREEN
    YELLOW = Back.YELLOW
    BLUE = Back.BLUE
    MAGENTA = Back.MAGENTA
    CYAN = Back.CYAN
    WHITE = Back.WHITE


DEBUG = "--debug" in sys.argv

# Stdout carries results and the oracle protocol, so logs never touch it.
colorama_init(wrap=False)


def set_debug(enabled: bool) -> None:
    """Toggles debug output for the rest of the process."""

    global DEBUG
    DEBUG = enabled


def formatted_date() -> str:
    """Returns the current formatted date in the format
    DD-MM-YYYY HH:MM:SS"""

    return time.strftime("%d-%m-%Y %H:%M:%S", time.localtime())


def log_message(content: str, l_type: str, bg_col: str) -> None:
    """Creates the final string and writes it to stderr.

    Args:
        content (str): The main text to be logged.
        l_type (str): The type of the log that will be displayed to the user.
        bg_col (str): The background colour for the `l_type`.
    """

    sys.stderr.write(
        f"{Fore.WHITE}{bg_col}[{l_type}]{Back.RESET} - "
        f"[{formatted_date()}] {content}{Style.RESET_ALL}\n"
    )


def debug(message: str) -> None:
    if DEBUG:
        log_message(message, "DEBUG", Ansi.YELLOW)


def info(message: str) -> None:
    log_message(message, "INFO", Ansi.GREEN)


def error(message: str) -> None:
    log_message(message, "ERROR", Ansi.RED)


def warning(message: str) -> None:
    log_message(message, "WARNING", Ansi.BLUE)
