"""Command-line surface: one handler per subcommand, dispatched by runner.run_cli."""

from .runner import build_parser, run_cli

__all__ = ['build_parser', 'run_cli']
