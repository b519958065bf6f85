"""
Command-line interface for boundary_tda.

Package structure:
- main.py: argument parsing, logging setup and exit codes
- schemas.py: voluptuous validation into RunConfig
- commands.py: command implementations
- artifacts.py: atomic file output
"""

from .commands import CommandOutput, run_command
from .main import build_parser, configure_logging, main
from .schemas import Command, OutputFormat, RunConfig, build_run_config

__all__ = [
    "Command",
    "CommandOutput",
    "OutputFormat",
    "RunConfig",
    "build_parser",
    "build_run_config",
    "configure_logging",
    "main",
    "run_command",
]
