import logging
from collections.abc import Iterable

from transdist.logger.handler import ConsoleHandler, LogHandler

LOG_FORMAT = "%(asctime)s:%(levelname)s:%(name)s:%(message)s"
DATE_FORMAT = "%m/%d/%Y %I:%M:%S %p"


def setup_logger(level: int | str = logging.WARNING, handlers: Iterable[LogHandler] | None = None) -> None:
    """
    Configures the root logger.

    Parameters:
        level: Level name ("DEBUG", "INFO", ...) or number.
        handlers: Handler factories; a console handler on stderr by default.
    """

    if isinstance(level, str):
        level = level.upper()
    logging.basicConfig(
        level=level,
        format=LOG_FORMAT,
        datefmt=DATE_FORMAT,
        handlers=[h.get_handler() for h in (handlers or [ConsoleHandler()])],
        force=True,
    )
