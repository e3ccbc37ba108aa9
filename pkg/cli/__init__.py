"""Command-line package for liequiver."""

from .commands import COMMANDS, run, run_verification, verification_tasks
from .parser import build_parser, parse_weight, parse_window

__all__ = ["COMMANDS", "run", "run_verification", "verification_tasks", "build_parser", "parse_weight", "parse_window"]
