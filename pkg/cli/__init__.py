"""Command-line entry point for circulantlab."""

__version__ = "0.1.0"

from .main import build_parser, main, run

__all__ = ["__version__", "build_parser", "main", "run"]
