"""
Main application for the skew DGA tool.

Command line entry point: reads a ring spec, runs one command and prints the
report as JSON or as rich tables.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from rich import box
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table

from skew_dga_tool.config.tool_config import ToolConfiguration
from skew_dga_tool.core.error_handler import ErrorContext, ErrorHandler, ExitStatus
from skew_dga_tool.core.exceptions import AlgebraError, SpecParseError
from skew_dga_tool.models.report_models import Report
from skew_dga_tool.models.ring_spec import RingSpec
from skew_dga_tool.tools.command_runner import COMMANDS, CommandRunner, RunFlags
from skew_dga_tool.tools.spec_parser import parse_ring_spec


def parse_color(text: str) -> Tuple[int, ...]:
    """Parse a color filter such as '[1,0,2]' or '1,0,2'."""
    body = text.strip().strip("[]")
    try:
        return tuple(int(part) for part in body.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"color must be integers like [1,0], got '{text}'")


def configure_logging(level: str, console: Optional[Console] = None):
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=console or Console(stderr=True), show_path=False)],
        force=True,
    )


class SkewDgaApp:
    """
    Command line application for the skew DGA tool.

    Loads the configuration, parses ring specs, dispatches commands and
    renders reports.
    """

    def __init__(self, config_path: Optional[str] = None, debug: bool = False,
                 console: Optional[Console] = None):
        """
        Initialize the application.

        Args:
            config_path: Optional path to a JSON configuration file
            debug: Enable debug logging
            console: Console to render to (stdout by default)
        """
        self.console = console or Console()
        self.error_console = Console(stderr=True)
        self.error_handler = ErrorHandler()
        self.configuration = ToolConfiguration(config_path)
        self.config = self.configuration.config
        self.debug_mode = debug
        configure_logging("DEBUG" if debug else self.config.log_level)
        self.logger = logging.getLogger(__name__)
        self.runner = CommandRunner(self.config, self.error_handler)

    def load_spec(self, spec_path: str) -> RingSpec:
        """Read and parse a ring spec from a path, or from stdin for '-'."""
        if spec_path == "-":
            text = sys.stdin.read()
        else:
            try:
                text = Path(spec_path).read_text(encoding="utf-8")
            except OSError as e:
                raise SpecParseError(f"cannot read ring spec {spec_path}: {e}")
        return parse_ring_spec(text)

    def run(self, command: str, spec_path: str, flags: RunFlags, output: str = "json") -> int:
        """
        Run one command and print its report.

        Returns:
            Process exit status
        """
        if not self.config.report_timing:
            flags.timing = False
        context = ErrorContext(operation="load_spec", command=command,
                               metadata={"spec": spec_path})
        try:
            spec = self.load_spec(spec_path)
        except AlgebraError as e:
            status = self.error_handler.handle_error(e, context)
            self.error_console.print(f"[red]❌ {e}[/red]", highlight=False)
            return int(status)
        report = self.runner.run(command, spec, flags)
        if output == "text":
            self.render_text(report)
        else:
            sys.stdout.write(report.to_json() + "\n")
        return int(report.status)

    def render_text(self, report: Report):
        """Render a report with rich panels and tables."""
        status_text = {ExitStatus.OK: "[green]✅ ok[/green]",
                       ExitStatus.VERIFICATION_FAILURE: "[red]❌ verification failed[/red]",
                       ExitStatus.INPUT_ERROR: "[red]❌ input error[/red]"}[report.status]
        header = (f"[bold]{report.command}[/bold]  N={report.bounds.hdeg}  "
                  f"D={report.bounds.ideg}  {status_text}")
        if report.elapsed_ms:
            header += f"  ({report.elapsed_ms} ms)"
        self.console.print(Panel(header, box=box.ROUNDED))
        scalars = Table(show_header=False, box=box.SIMPLE)
        scalars.add_column("Key", style="cyan")
        scalars.add_column("Value", style="white")
        for key in sorted(report.result):
            value = report.result[key]
            if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
                self.console.print(self._table(key, value))
            elif isinstance(value, str) and "\n" in value:
                self.console.print(Panel(value, title=key, box=box.SIMPLE))
            else:
                scalars.add_row(key, self._format(value))
        if scalars.row_count:
            self.console.print(scalars)
        for warning in report.warnings:
            self.console.print(f"[yellow]⚠️  {warning}[/yellow]", highlight=False)

    def _table(self, title: str, rows: List[Dict[str, Any]]) -> Table:
        columns: List[str] = []
        for row in rows:
            columns.extend(k for k in row if k not in columns)
        table = Table(title=title, box=box.ROUNDED)
        for column in columns:
            table.add_column(column, style="cyan" if column == columns[0] else "white")
        for row in rows:
            table.add_row(*(self._format(row.get(c, "")) for c in columns))
        return table

    @staticmethod
    def _format(value: Any) -> str:
        if isinstance(value, bool):
            return "yes" if value else "no"
        if isinstance(value, dict):
            return ", ".join(f"{k}: {SkewDgaApp._format(v)}" for k, v in sorted(value.items()))
        if isinstance(value, list):
            return "[" + ", ".join(SkewDgaApp._format(v) for v in value) + "]"
        return "" if value is None else str(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skew-dga",
        description="Skew DGA Tool - DG algebra over quotients of skew polynomial rings"
    )
    parser.add_argument("command", choices=COMMANDS, help="Computation to run")
    parser.add_argument("--spec", "-s", default="-", help="Ring spec file ('-' for stdin)")
    parser.add_argument("--hdeg", type=int, help="Homological bound N")
    parser.add_argument("--deg", type=int, help="Internal degree bound D")
    parser.add_argument("--color", type=parse_color, help="Color filter, e.g. [1,0]")
    output = parser.add_mutually_exclusive_group()
    output.add_argument("--json", dest="output", action="store_const", const="json",
                        help="Print the report as JSON (default)")
    output.add_argument("--text", dest="output", action="store_const", const="text",
                        help="Print the report as tables")
    parser.set_defaults(output="json")
    parser.add_argument("--seed", type=int, help="Seed for randomized representative choices")
    parser.add_argument("--config", "-c", help="Path to configuration file")
    parser.add_argument("--debug", "-d", action="store_true", help="Enable debug logging")
    parser.add_argument("--no-timing", action="store_true", help="Report elapsed_ms as 0")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for the application."""
    args = build_parser().parse_args(argv)
    try:
        app = SkewDgaApp(config_path=args.config, debug=args.debug)
    except AlgebraError as e:
        Console(stderr=True).print(f"[red]❌ {e}[/red]", highlight=False)
        return int(ExitStatus.INPUT_ERROR)
    flags = RunFlags(hdeg=args.hdeg, ideg=args.deg, color=args.color, seed=args.seed,
                     timing=not args.no_timing)
    try:
        return app.run(args.command, args.spec, flags, args.output)
    except KeyboardInterrupt:
        app.console.print("\n👋 Interrupted")
        return int(ExitStatus.VERIFICATION_FAILURE)


if __name__ == "__main__":
    sys.exit(main())
