"""Command-line orchestration and report emission."""
from src.cli.commands import COMMANDS, build_parser, run
from src.cli.verify import VERIFICATIONS, run_verification

__all__ = ["COMMANDS", "build_parser", "run", "VERIFICATIONS", "run_verification"]
