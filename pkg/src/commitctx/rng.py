"""Deterministic RNG derivation.

Every random draw in the package comes from a generator derived from an
integer seed plus a stable string tag (commit id, run index, ...), so
parallel or reordered execution cannot change results.  Python's builtin
``hash`` is salted per process and must never be used here.
"""

import hashlib

import numpy as np


def derive_seed(seed: int, *tags) -> int:
    """Collapse (seed, tags...) into a stable 64-bit seed."""
    h = hashlib.sha256()
    h.update(str(int(seed)).encode())
    for tag in tags:
        h.update(b"\x1f")
        h.update(str(tag).encode())
    return int.from_bytes(h.digest()[:8], "little")


def derive_rng(seed: int, *tags) -> np.random.Generator:
    """A fresh Generator keyed by (seed, tags...)."""
    return np.random.default_rng(derive_seed(seed, *tags))
