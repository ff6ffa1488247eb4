"""Deterministic RNG streams derived from a base seed.

Every randomized routine in the package takes a seed and derives one
independent stream per repetition / test / trial from it, so reports are
bit-identical across runs and insensitive to how much randomness earlier
repetitions consumed.
"""

from __future__ import annotations

import random

DEFAULT_SEED = 271828


def substream(seed: int, *path: int) -> random.Random:
    """A fresh generator keyed by (seed, *path).

    String seeding hashes the key through SHA-512 (the stdlib's version-2
    seeding), which is stable across platforms and Python releases.
    """
    key = ":".join(str(part) for part in (seed, *path))
    return random.Random(key)
