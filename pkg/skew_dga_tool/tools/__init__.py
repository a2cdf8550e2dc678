"""
Tools module for the skew DGA tool.

Ring-spec parsing and command dispatch behind the command line interface.
"""

from skew_dga_tool.tools.spec_parser import (
    parse_ring_spec, print_ring_spec, parse_polynomial, build_ring, build_quotient
)
from skew_dga_tool.tools.command_runner import COMMANDS, CommandRunner, RunFlags, run

__all__ = [
    "parse_ring_spec",
    "print_ring_spec",
    "parse_polynomial",
    "build_ring",
    "build_quotient",
    "COMMANDS",
    "CommandRunner",
    "RunFlags",
    "run"
]
