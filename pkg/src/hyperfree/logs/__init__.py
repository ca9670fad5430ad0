"""
Logs Module - Centralized logging configuration
"""

import sys
from pathlib import Path
from typing import Optional

from loguru import logger

CONSOLE_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function} - {message}"


def configure(verbose: bool = False, log_directory: Optional[str] = None) -> None:
    """
    Install the stderr sink and, when a directory is given, a rotating file sink

    Args:
        verbose: DEBUG level when True, INFO otherwise
        log_directory: Directory for hyperfree_{time}.log files
    """
    logger.remove()
    logger.enable("hyperfree")
    level = "DEBUG" if verbose else "INFO"
    logger.add(sys.stderr, format=CONSOLE_FORMAT, level=level)

    if log_directory:
        Path(log_directory).mkdir(parents=True, exist_ok=True)
        logger.add(
            str(Path(log_directory) / "hyperfree_{time}.log"),
            rotation="10 MB",
            retention="7 days",
            level="DEBUG" if verbose else "INFO",
            format=FILE_FORMAT,
        )


__all__ = ["logger", "configure"]
