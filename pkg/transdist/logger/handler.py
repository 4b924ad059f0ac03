import logging
import sys
from abc import ABC, abstractmethod
from pathlib import Path


class LogHandler(ABC):
    """Abstract base class for log handler factories"""

    @abstractmethod
    def get_handler(self) -> logging.Handler:
        pass


class ConsoleHandler(LogHandler):
    """Writes to stderr"""

    def get_handler(self) -> logging.Handler:
        return logging.StreamHandler(sys.stderr)


class FileHandler(LogHandler):
    """Appends to a log file, creating parent directories as needed"""

    def __init__(self, filename: str | Path, encoding: str = "utf-8"):
        self.filename = Path(filename)
        self.encoding = encoding

    def get_handler(self) -> logging.Handler:
        self.filename.parent.mkdir(parents=True, exist_ok=True)
        return logging.FileHandler(self.filename, mode="a", encoding=self.encoding)
