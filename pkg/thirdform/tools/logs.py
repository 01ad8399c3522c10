# pyright: reportConstantRedefinition=false
import logging
import os
import sys
from typing import TextIO

RESET = "\x1B[0m"
DIM = "\x1B[2m"
RED = "\x1B[31m"
GREEN = "\x1B[32m"
YELLOW = "\x1B[33m"
BLUE = "\x1B[34m"
CYAN = "\x1B[36m"
WHITE = "\x1B[37m"
BG_RED = "\x1B[41m"


def colors_enabled(stream: TextIO) -> bool:
    """colors_enabled returns False if NO_COLOR is set or the stream is not a terminal."""
    if os.getenv("NO_COLOR"):
        return False
    isatty = getattr(stream, "isatty", None)
    return bool(isatty and isatty())


class ColoredFormatter(logging.Formatter):
    """ColoredFormatter renders `[LEVEL HH:MM:SS.mmm] logger: message`,
    optionally decorated with ANSI colors."""

    default_time_format = "%H:%M:%S"
    default_msec_format = "%s.%03d"

    def __init__(self, color: bool = True) -> None:
        super().__init__()
        self.color = color

    def get_msg_color(self, level: int) -> str:
        if not self.color:
            return ""
        elif level >= logging.CRITICAL:
            return WHITE + BG_RED
        elif level >= logging.ERROR:
            return RED
        elif level >= logging.WARNING:
            return YELLOW
        elif level >= logging.INFO:
            return RESET
        else:
            return DIM

    def usesTime(self) -> bool:
        return True

    def format(self, record: logging.LogRecord) -> str:
        record.message = record.getMessage()
        record.asctime = self.formatTime(record)
        if record.exc_info and not record.exc_text:
            record.exc_text = self.formatException(record.exc_info)
        exception_suffix = f"\n{record.exc_text}" if record.exc_text else ""

        if not self.color:
            return (
                f"[{record.levelname} {record.asctime}] {record.name}: {record.message}"
                f"{exception_suffix}"
            )

        msg_color = self.get_msg_color(record.levelno)
        return (
            f"{BLUE}[{CYAN}{record.levelname}{BLUE} {record.asctime}] "
            f"{GREEN}{record.name}{RESET}: {msg_color}{record.message}{RESET}"
            f"{exception_suffix}"
        )


def initialize(verbose: bool, color: bool | None = None) -> None:
    """initialize sets up the root logger to write to stderr only.

    stdout is left untouched, as it carries the report stream.
    If color is None, it's detected with colors_enabled(sys.stderr).
    """
    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG if verbose else logging.INFO)

    # Remove any handlers that dump onto stdout/stderr
    handlers_to_remove: list[logging.Handler] = [
        handler
        for handler in root_logger.handlers
        if isinstance(handler, logging.StreamHandler)
        and (handler.stream is sys.stdout or handler.stream is sys.stderr)  # type: ignore
    ]

    for handler in handlers_to_remove:
        root_logger.removeHandler(handler)

    if color is None:
        color = colors_enabled(sys.stderr)

    new_handler = logging.StreamHandler(sys.stderr)
    new_handler.setFormatter(ColoredFormatter(color))
    root_logger.addHandler(new_handler)
