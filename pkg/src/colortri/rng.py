"""Seeded randomness.

All randomness comes from numpy's Philox counter-based bit generator.
Bounded integers use numpy's unbiased rejection sampler, so colors carry no
modulo bias. Child seeds are derived with :func:`derive_seed`, which hashes
``(seed, *path)`` through ``SeedSequence``; the same path always gives the
same child, and distinct paths give independent streams.
"""

from __future__ import annotations

import numpy as np

SEED_MASK = (1 << 64) - 1


def generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(int(seed) & SEED_MASK))


def derive_seed(seed: int, *path: int) -> int:
    ss = np.random.SeedSequence([int(seed) & SEED_MASK, *map(int, path)])
    return int(ss.generate_state(1, np.uint64)[0])
