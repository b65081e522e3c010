"""Deterministic random streams.

All randomness in the package flows through `spawn_rng`. Streams are
produced by the Philox counter-based generator keyed through
`numpy.random.SeedSequence([root_seed, *path])`, so any (seed, path)
pair names one reproducible stream. Independent path components give
independent streams, which keeps parallel trial execution
order-independent: a trial's stream depends only on its indices, never
on scheduling.
"""

from __future__ import annotations

import numpy as np


def spawn_rng(seed: int, *path: int) -> np.random.Generator:
    """Return the Philox stream identified by a root seed and a stream path."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, *path])))


def derive_seed(seed: int, *path: int) -> int:
    """Collapse (seed, path) into a single integer usable as a child root seed."""
    return int(np.random.SeedSequence([seed, *path]).generate_state(1, np.uint64)[0])
