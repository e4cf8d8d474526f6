import logging
from dataclasses import asdict, dataclass, field
from pathlib import Path

from config.settings import MANIFEST_SCHEMA, TOOL_VERSION
from services.data_service import DataService
from utils.errors import ParseError
from utils.formatting import dumps_report

logger = logging.getLogger(__name__)


@dataclass
class RunManifest:
    """Record of one command-line run, sufficient to replay it.

    All outputs of a command are a function of its argv once the seed is
    resolved, so the manifest stores the argv with the effective seed
    written in, plus digests of every input file.

    Attributes:
        command: Subcommand name (e.g. 'embed').
        argv: Full argument list, seed resolved.
        config: Resolved configuration (group spec, bank, selection, reduction, seeds).
        version: Tool version that produced the run.
        input_digests: Input path -> SHA-256 of its bytes.
        wall_time: Seconds spent in the command.
        notes: Steps applied implicitly (e.g. orbit closure).
    """
    command: str
    argv: list
    config: dict = field(default_factory=dict)
    version: str = TOOL_VERSION
    input_digests: dict = field(default_factory=dict)
    wall_time: float = 0.0
    notes: list = field(default_factory=list)
    schema: int = MANIFEST_SCHEMA

    def record_input(self, path: str | Path) -> None:
        self.input_digests[str(path)] = DataService.file_digest(path)

    def changed_inputs(self) -> list[str]:
        """Inputs whose current bytes differ from the recorded digest (or are missing)."""
        changed = []
        for path, digest in self.input_digests.items():
            try:
                if DataService.file_digest(path) != digest:
                    changed.append(path)
            except OSError:
                changed.append(path)
        return changed

    def save(self, path: str | Path) -> None:
        Path(path).write_text(dumps_report(asdict(self)), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> 'RunManifest':
        """Read a manifest written by save().

        Raises:
            ParseError: On a malformed manifest.
            OSError: If the file cannot be read.
        """
        data = DataService.load_json(path)
        try:
            manifest = cls(**data)
        except TypeError as e:
            raise ParseError(f"{path}: not a run manifest ({e}).") from e
        if not isinstance(manifest.argv, list) or not manifest.argv:
            raise ParseError(f"{path}: manifest has no argv to replay.")
        if manifest.version != TOOL_VERSION:
            logger.warning("Manifest written by version %s, replaying with %s", manifest.version, TOOL_VERSION)
        return manifest
