import numpy as np
import pytest

from groups import build_cyclic_shift, build_dihedral, build_sign_flip


def builtin_actions(dims=range(2, 9)):
    """Every built-in family in the given dimensions, as (name, action) pairs."""
    actions = []
    for d in dims:
        actions.append((f"cyclic{d}", build_cyclic_shift(d)))
        actions.append((f"sign_flip{d}", build_sign_flip(d)))
        if d >= 3:
            actions.append((f"dihedral{d}", build_dihedral(d)))
    return actions


BUILTIN_ACTIONS = builtin_actions()
SMALL_ACTIONS = builtin_actions(range(2, 6))


@pytest.fixture
def rng():
    return np.random.default_rng(2024)


@pytest.fixture
def sign_flip2():
    return build_sign_flip(2)


@pytest.fixture
def cyclic4():
    return build_cyclic_shift(4)


@pytest.fixture
def write_json(tmp_path):
    """Write a dict to a JSON file under tmp_path and return its path."""
    import json

    def _write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)
    return _write


@pytest.fixture
def write_csv(tmp_path):
    """Write rows (lists) to a headerless CSV under tmp_path and return its path."""
    def _write(name, rows):
        path = tmp_path / name
        path.write_text("".join(",".join(str(v) for v in row) + "\n" for row in rows), encoding="utf-8")
        return str(path)
    return _write
