from .batch import run_batch
from .config import Mode, OutputFormat, RunConfig
from .main import build_parser, main

__all__ = [
    "Mode",
    "OutputFormat",
    "RunConfig",
    "build_parser",
    "main",
    "run_batch",
]
