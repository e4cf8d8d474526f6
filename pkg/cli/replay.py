"""Replay of a recorded run."""

import logging

from .context import CommandContext, override_option
from state.run_manifest import RunManifest
from utils.errors import ParseError

logger = logging.getLogger(__name__)


def cmd_run(ctx: CommandContext) -> int:
    """Re-run the command recorded in --manifest, optionally writing to a new --out."""
    from .runner import run_cli

    manifest = RunManifest.load(ctx.args.manifest)
    if manifest.command == 'run':
        raise ParseError(f"{ctx.args.manifest}: a manifest cannot replay another replay.")
    changed = manifest.changed_inputs()
    if changed:
        logger.warning("Inputs changed since the run was recorded: %s", ", ".join(changed))

    argv = list(manifest.argv)
    if ctx.args.out is not None:
        argv = override_option(argv, '--out', ctx.args.out)
    if ctx.args.quiet and '--quiet' not in argv:
        argv.append('--quiet')
    logger.info("Replaying %s", " ".join(argv))
    return run_cli(argv, use_env=False)


def register(subparsers, common) -> None:
    p_run = subparsers.add_parser('run', parents=[common], help="Replay a recorded run manifest")
    p_run.add_argument('--manifest', required=True, help="Manifest JSON written by a previous run")
    p_run.set_defaults(func=cmd_run)
