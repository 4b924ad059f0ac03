from .handler import ConsoleHandler, FileHandler, LogHandler
from .setup import setup_logger

__all__ = [
    "ConsoleHandler",
    "FileHandler",
    "LogHandler",
    "setup_logger",
]
