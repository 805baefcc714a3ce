#!/usr/bin/env python3
"""
QDL - 1-level density lab for quadratic Dirichlet L-functions

This is the main entry point. It configures logging and hands the
command line to src.cli.
"""
import logging
import sys
from pathlib import Path

# Add the project root to Python path
sys.path.insert(0, str(Path(__file__).parent))

from src.cli import run
from src.config import LOG_LEVEL


def main() -> int:
    """Main entry point for the lab."""
    logging.basicConfig(
        level=getattr(logging, LOG_LEVEL.upper(), logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
