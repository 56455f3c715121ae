#!/usr/bin/env python3
"""
Main entry point for FilterLab
"""

import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.cli.commands import cli  # noqa: E402


def main():
    """Main function"""
    cli(prog_name="filterlab")


if __name__ == "__main__":
    main()
