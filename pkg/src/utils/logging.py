"""Logging configuration and utilities."""

import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Optional

from loguru import logger

from src.config import settings

CONSOLE_FORMAT = (
    "<green>{time:HH:mm:ss.SSS}</green> | "
    "<level>{level: <8}</level> | "
    "<magenta>{extra[scenario]}</magenta> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan> | "
    "<level>{message}</level>"
)

FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[scenario]} | {name}:{function}:{line} | {message}"


class InterceptHandler(logging.Handler):
    """Route standard library records (sympy, pydantic) into loguru."""

    def emit(self, record):
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        frame, depth = logging.currentframe(), 2
        while frame.f_code.co_filename == logging.__file__:
            frame = frame.f_back
            depth += 1

        logger.opt(depth=depth, exception=record.exc_info).log(level, record.getMessage())


def _add_file_sinks(log_path: Path, level: str):
    log_path.parent.mkdir(parents=True, exist_ok=True)
    serialize = settings.log_format == "json"
    common = dict(
        rotation=settings.log_max_size,
        retention=settings.log_backup_count,
        compression="gz",
        serialize=serialize,
        backtrace=True,
        diagnose=False,
    )
    logger.add(log_path, format=FILE_FORMAT, level=level, **common)
    logger.add(log_path.with_name(f"{log_path.stem}.error{log_path.suffix}"), format=FILE_FORMAT, level="ERROR", **common)


def setup_logging(level: Optional[str] = None):
    """Configure loguru sinks.

    Console output goes to stderr because stdout carries report tables.
    A file sink (text or JSON lines) and an error-only file are added
    when ``LOG_FILE_PATH`` is set.
    """
    level = (level or settings.log_level).upper()

    logger.remove()
    logger.configure(extra={"scenario": "-"})
    logger.add(sys.stderr, format=CONSOLE_FORMAT, level=level, colorize=True, backtrace=True, diagnose=False)

    if settings.log_file_path:
        _add_file_sinks(Path(settings.log_file_path), level)

    logging.basicConfig(handlers=[InterceptHandler()], level=0, force=True)
    # sympy's polys layer is chatty at debug level
    logging.getLogger("sympy").setLevel(logging.WARNING)


@contextmanager
def scenario_context(name: str):
    """Tag every record emitted inside the block with the scenario name."""
    with logger.contextualize(scenario=name):
        yield


def get_logger(name: Optional[str] = None):
    """Get logger instance."""
    if name:
        return logger.bind(name=name)
    return logger


logger.configure(extra={"scenario": "-"})
