"""Shared plumbing for command handlers: seeds, inputs, outputs and manifests."""

import argparse
import json
import os
import sys
from dataclasses import dataclass

from config.settings import RANDOM_SEED, SEED_ENV_VAR
from groups.base import GroupAction
from groups.verification import verify_group
from orbits.dataset import Dataset
from services.data_service import DataService
from state.run_manifest import RunManifest
from utils.errors import DomainError, ParseError


def resolve_seed(flag_value: int | None, use_env: bool = True) -> int:
    """COORBIT_SEED, when set, overrides the --seed flag.

    Raises:
        ParseError: If the environment variable is not an integer.
    """
    env_value = os.environ.get(SEED_ENV_VAR) if use_env else None
    if env_value not in (None, ""):
        try:
            return int(env_value)
        except ValueError as e:
            raise ParseError(f"{SEED_ENV_VAR}={env_value!r} is not an integer.") from e
    return RANDOM_SEED if flag_value is None else int(flag_value)


def _strip_option(argv: list, option: str) -> list:
    out, skip = [], False
    for token in argv:
        if skip:
            skip = False
            continue
        if token == option:
            skip = True
            continue
        if token.startswith(option + "="):
            continue
        out.append(token)
    return out


def replay_argv(argv: list, seed: int | None) -> list:
    """argv as stored in a manifest: effective seed written in, --manifest-out dropped."""
    argv = _strip_option(list(argv), "--manifest-out")
    if seed is None:
        return argv
    for alias in ("--seed", "--window-seed"):
        argv = _strip_option(argv, alias)
    return argv + ["--seed", str(seed)]


def override_option(argv: list, option: str, value: str) -> list:
    return _strip_option(list(argv), option) + [option, value]


@dataclass
class CommandContext:
    """State handed to every command handler.

    Attributes:
        args: Parsed arguments.
        seed: Effective seed, None for commands without one.
        manifest: Manifest being recorded for this run.
    """
    args: argparse.Namespace
    seed: int | None
    manifest: RunManifest

    def load_spec(self, path: str) -> dict:
        spec = DataService.load_group_spec(path)
        self.manifest.record_input(path)
        self.manifest.config['group'] = spec
        return spec

    def load_action(self, path: str, verified: bool = True) -> tuple[dict, GroupAction]:
        """Load and build a group; with verified=True, reject anything failing the group law.

        Raises:
            DomainError: 'not-a-group' if verification fails.
        """
        spec = self.load_spec(path)
        action = DataService.build_group(spec)
        if verified:
            report = verify_group(action)
            if not report.passed:
                failed = [name for name, check in report.checks.items() if not check.passed]
                raise DomainError("not-a-group", f"{path} fails group checks: {', '.join(failed)}.")
        return spec, action

    def load_dataset(self, path: str, action: GroupAction) -> Dataset:
        dataset = DataService.load_dataset(path, id_column=self.args.id_column, dim=action.dim)
        self.manifest.record_input(path)
        return dataset

    def emit_json(self, payload) -> None:
        DataService.write_report(payload, self.args.out)

    def emit_text(self, text: str) -> None:
        DataService.write_text(text, self.args.out)


def report_error(error: Exception, kind: str | None = None) -> None:
    """Print {"error", "message"} to stderr; stdout is reserved for payloads.

    The payload is one compact JSON line written last, so it can be split
    from any log lines that precede it.
    """
    if isinstance(error, DomainError):
        payload = error.to_dict()
    else:
        payload = {"error": kind or type(error).__name__, "message": str(error)}
    sys.stderr.flush()
    print(json.dumps(payload, sort_keys=True), file=sys.stderr)
