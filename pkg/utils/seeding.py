import numpy as np


def make_rng(seed: int | np.random.SeedSequence) -> np.random.Generator:
    """
    Create an isolated numpy Generator.

    Args:
        seed: integer seed or SeedSequence

    Returns:
        np.random.Generator independent of the global numpy state
    """
    return np.random.default_rng(seed)


def derive_seeds(master_seed: int, count: int) -> list[int]:
    """
    Split a master seed into independent child seeds.

    Children are a fixed function of (master_seed, position), so the same
    master seed always hands the same seed to the same consumer.

    Args:
        master_seed: integer seed
        count: number of child seeds

    Returns:
        list of 63-bit integer seeds
    """
    children = np.random.SeedSequence(master_seed).spawn(count)
    return [int(child.generate_state(2, dtype=np.uint64)[0] >> np.uint64(1)) for child in children]


def spawn_sequences(seed: int, count: int) -> list[np.random.SeedSequence]:
    """
    Per-task seed sequences for data-parallel work.

    Task k always receives child k, so serial and threaded runs agree.
    """
    return np.random.SeedSequence(seed).spawn(count)
