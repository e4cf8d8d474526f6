"""Argument parsing, dispatch and the exit-code contract."""

import argparse
import logging
import sys
import time

from . import analysis_commands, embed_commands, group_commands, replay
from .context import CommandContext, replay_argv, report_error, resolve_seed
from config.settings import EXIT_DOMAIN, EXIT_IO, EXIT_PARSE, TOOL_VERSION
from state.run_manifest import RunManifest
from utils.errors import DomainError, ParseError


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--out', default=None, help="Write the result here instead of stdout")
    common.add_argument('--quiet', action='store_true', help="Only log warnings and errors")
    common.add_argument('--threads', type=int, default=1, help="Worker threads, 0 = auto (default: 1)")
    common.add_argument('--manifest-out', default=None, help="Write a run manifest for replay")

    parser = argparse.ArgumentParser(
        prog="coorbit",
        description="Group-invariant embeddings of vectors via sorted coorbits."
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {TOOL_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)
    group_commands.register(sub, common)
    embed_commands.register(sub, common)
    analysis_commands.register(sub, common)
    replay.register(sub, common)
    return parser


def configure_logging(quiet: bool) -> None:
    logging.basicConfig(
        level=logging.WARNING if quiet else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True
    )


def _manifest_path(args: argparse.Namespace) -> str | None:
    if args.manifest_out:
        return args.manifest_out
    if getattr(args, 'default_manifest', False) and args.out:
        return f"{args.out}.manifest.json"
    return None


def run_cli(argv: list[str], use_env: bool = True) -> int:
    """Parse argv, run one command and map failures to exit codes.

    Exit codes: 0 success, 2 domain failure, 3 parse error, 4 I/O error.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else 0
    configure_logging(args.quiet)

    started = time.perf_counter()
    try:
        seed = resolve_seed(args.seed, use_env) if hasattr(args, 'seed') else None
        manifest = RunManifest(command=args.command, argv=replay_argv(argv, seed))
        ctx = CommandContext(args=args, seed=seed, manifest=manifest)
        code = args.func(ctx)
        manifest.wall_time = time.perf_counter() - started
        path = _manifest_path(args)
        if path is not None and args.command != 'run':
            manifest.save(path)
        return code
    except ParseError as e:
        report_error(e)
        return EXIT_PARSE
    except DomainError as e:
        report_error(e)
        return EXIT_DOMAIN
    except OSError as e:
        report_error(e, kind="io-error")
        return EXIT_IO
