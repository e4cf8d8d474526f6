"""Service layer for loading and writing group specs, datasets and reports."""

import hashlib
import io
import json
import logging
from pathlib import Path

import numpy as np
import pandas as pd

from config.settings import CSV_FLOAT_FORMAT, GROUP_TYPES
from filters.base import SelectionSet, WindowBank
from filters.embedding import EmbeddingConfig
from filters.reduction import LinearReduction
from groups import AVAILABLE_GROUPS
from groups.base import GroupAction
from orbits.dataset import Dataset
from utils.errors import DomainError, ParseError
from utils.formatting import dumps_report, to_jsonable

logger = logging.getLogger(__name__)


class DataService:
    """Handles file loading, validation, and serialization."""

    @staticmethod
    def file_digest(path: str | Path) -> str:
        """SHA-256 hex digest of a file's bytes."""
        return hashlib.sha256(Path(path).read_bytes()).hexdigest()

    @staticmethod
    def load_json(path: str | Path) -> dict:
        """Read a JSON object from disk.

        Raises:
            ParseError: If the file is not a JSON object.
            OSError: If the file cannot be read.
        """
        text = Path(path).read_text(encoding="utf-8")
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"{path}: invalid JSON ({e.msg} at line {e.lineno}).") from e
        if not isinstance(data, dict):
            raise ParseError(f"{path}: expected a JSON object, got {type(data).__name__}.")
        return data

    @staticmethod
    def load_group_spec(path: str | Path) -> dict:
        spec = DataService.load_json(path)
        DataService.validate_group_spec(spec)
        return spec

    @staticmethod
    def validate_group_spec(spec: dict) -> None:
        """Check the 'type' and 'dim' fields of a group spec.

        Raises:
            ParseError: On an unknown type or a non-integer dim.
        """
        group_type = spec.get('type')
        if group_type not in GROUP_TYPES:
            raise ParseError(f"Unknown group type {group_type!r}; expected one of {list(GROUP_TYPES)}.")
        dim = spec.get('dim')
        if isinstance(dim, bool) or not isinstance(dim, int):
            raise ParseError(f"Field 'dim' must be an integer, got {dim!r}.")

    @staticmethod
    def build_group(spec: dict) -> GroupAction:
        """Build the GroupAction a spec describes.

        Raises:
            ParseError: On a malformed spec.
            DomainError: On a spec that parses but violates a precondition.
        """
        DataService.validate_group_spec(spec)
        family = AVAILABLE_GROUPS[spec['type']].from_spec(spec)
        action = family.build()
        logger.debug("Built %s group: d=%d, N=%d", spec['type'], action.dim, action.order)
        return action

    @staticmethod
    def load_dataset(path: str | Path, id_column: bool = False, dim: int | None = None) -> Dataset:
        """Read a headerless CSV of points, one per row.

        Args:
            path: CSV file path.
            id_column: Whether the first column holds point ids.
            dim: Expected dimension, checked when given.

        Raises:
            ParseError: On non-numeric or ragged rows.
            DomainError: 'dimension-mismatch' if dim is given and differs.
        """
        try:
            df = pd.read_csv(path, header=None, dtype=str, skip_blank_lines=True)
        except pd.errors.EmptyDataError:
            if dim is None:
                raise ParseError(f"{path}: empty dataset and no dimension to fall back on.")
            return Dataset(dim=dim, points=np.zeros((0, dim)))
        except pd.errors.ParserError as e:
            raise ParseError(f"{path}: {e}") from e

        ids = None
        if id_column:
            ids = df.iloc[:, 0].str.strip().tolist()
            df = df.iloc[:, 1:]
        try:
            values = df.apply(lambda col: pd.to_numeric(col.str.strip())).to_numpy(dtype=float)
        except ValueError as e:
            raise ParseError(f"{path}: non-numeric entry ({e}).") from e
        if np.isnan(values).any():
            raise ParseError(f"{path}: rows must all have the same number of coordinates.")

        if dim is not None and values.shape[1] != dim:
            raise DomainError(
                "dimension-mismatch",
                f"{path}: points have {values.shape[1]} coordinates, the group acts on {dim}."
            )
        return Dataset.from_points(values, ids=ids)

    @staticmethod
    def embedding_csv(matrix: np.ndarray, ids=None) -> str:
        """Render embedded rows as CSV, optionally led by the point ids."""
        df = pd.DataFrame(np.asarray(matrix, dtype=float))
        if ids is not None:
            df.insert(0, 'id', list(ids))
        buffer = io.StringIO()
        df.to_csv(buffer, header=False, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
        return buffer.getvalue()

    @staticmethod
    def write_text(text: str, path: str | Path | None) -> None:
        """Write text to path, or to stdout when path is None."""
        if path is None:
            print(text, end="")
            return
        Path(path).write_text(text, encoding="utf-8")

    @staticmethod
    def write_report(report, path: str | Path | None = None) -> str:
        text = dumps_report(report)
        DataService.write_text(text, path)
        return text

    @staticmethod
    def config_to_dict(config: EmbeddingConfig) -> dict:
        """JSON-ready form of an EmbeddingConfig."""
        reduction = None
        if config.reduction is not None:
            reduction = {
                'matrix': config.reduction.matrix,
                'seed': config.reduction.seed
            }
        return to_jsonable({
            'group': config.group_spec,
            'windows': config.bank.windows,
            'selection': [list(ranks) for ranks in config.selection.per_window],
            'reduction': reduction,
            'seed': config.seed
        })

    @staticmethod
    def config_from_dict(data: dict) -> EmbeddingConfig:
        """Inverse of config_to_dict.

        Raises:
            ParseError: On missing or malformed fields.
        """
        try:
            bank = WindowBank.from_vectors(data['windows'])
            selection = SelectionSet.from_lists(data['selection'])
            reduction = None
            if data.get('reduction') is not None:
                reduction = LinearReduction.from_matrix(
                    data['reduction']['matrix'], seed=data['reduction'].get('seed')
                )
            return EmbeddingConfig(
                group_spec=data['group'],
                bank=bank,
                selection=selection,
                reduction=reduction,
                seed=data.get('seed')
            )
        except (KeyError, TypeError) as e:
            raise ParseError(f"Embedding config is missing or mistypes a field: {e}") from e
