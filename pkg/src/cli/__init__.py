"""
Command-line entry point
"""

from src.cli.commands import cli

__all__ = ["cli"]
