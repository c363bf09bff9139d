"""Logging configuration for the CLI and the self-test runner."""

import logging
import os
import sys
from typing import Optional, TextIO

CYAN = "\033[36m"
GREEN = "\033[32m"
YELLOW = "\033[33m"
RED = "\033[31m"
MAGENTA = "\033[35m"
RESET = "\033[0m"


def use_color(stream: TextIO) -> bool:
    """Colors only on a TTY, and never when NO_COLOR is set."""
    if "NO_COLOR" in os.environ:
        return False
    isatty = getattr(stream, "isatty", None)
    return bool(isatty and isatty())


class ColoredFormatter(logging.Formatter):
    """Formatter with level colors and icons; plain text when color is off."""

    COLORS = {
        "DEBUG": CYAN,
        "INFO": GREEN,
        "WARNING": YELLOW,
        "ERROR": RED,
        "CRITICAL": MAGENTA,
    }

    ICONS = {
        "DEBUG": "🔍",
        "INFO": "ℹ️ ",
        "WARNING": "⚠️ ",
        "ERROR": "❌",
        "CRITICAL": "🚨",
    }

    def __init__(self, fmt: str, datefmt: Optional[str] = None, color: bool = True):
        super().__init__(fmt, datefmt=datefmt)
        self.color = color

    def format(self, record):
        """Format a record on a single line."""
        levelname = record.levelname.lower()
        if self.color:
            icon = self.ICONS.get(record.levelname, "")
            color = self.COLORS.get(record.levelname, RESET)
            levelname = f"{color}{icon} {levelname}{RESET}"

        original = record.levelname
        record.levelname = levelname
        try:
            return super().format(record)
        finally:
            record.levelname = original


def setup_logger(
    name: str,
    level: int = logging.WARNING,
    stream: Optional[TextIO] = None,
    fmt: str = "%(levelname)s: %(message)s",
) -> logging.Logger:
    """
    Set up a logger writing single-line records to ``stream``.

    Args:
        name: Logger name
        level: Logging level
        stream: Destination (stderr when None)
        fmt: Record format

    Returns:
        Configured logger
    """
    stream = stream if stream is not None else sys.stderr
    logger = logging.getLogger(name)
    logger.setLevel(level)

    for handler in list(logger.handlers):
        if getattr(handler, "stream", None) is stream:
            handler.setLevel(level)
            return logger
        logger.removeHandler(handler)

    handler = logging.StreamHandler(stream)
    handler.setLevel(level)
    handler.setFormatter(ColoredFormatter(fmt, datefmt="%H:%M:%S", color=use_color(stream)))

    logger.addHandler(handler)
    logger.propagate = False

    return logger
