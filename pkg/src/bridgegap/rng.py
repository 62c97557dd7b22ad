"""Deterministic random-stream derivation.

Every random draw in the package flows from a 64-bit master seed through
numpy's splittable ``SeedSequence`` mechanism: a stream is identified by
the master seed plus a small integer path, and two distinct paths yield
statistically independent PCG64 generators.  This makes parallel trials
reproducible without shared state: a trial stream is derived as
``substream(master, tag, point_index, trial_index)`` and does not depend
on execution order.

Stream tags used by the package:

==================  ===========================================
STREAM_BLOCK1       edges inside the backward community
STREAM_BLOCK2       edges inside the forward community
STREAM_BRIDGES      cross-community edges
STREAM_SOURCE       per-trial source-node choice
TAG_SWEEP           bridge-sweep trials
TAG_CONCENTRATION   path-count concentration trials
TAG_TRANSITION      connectivity phase-transition trials
==================  ===========================================
"""

from __future__ import annotations

import numpy as np

STREAM_BLOCK1 = 1
STREAM_BLOCK2 = 2
STREAM_BRIDGES = 3
STREAM_SOURCE = 4

TAG_SWEEP = 10
TAG_CONCENTRATION = 11
TAG_TRANSITION = 12

_MAX_SEED = 2**64


def check_seed(seed: int) -> int:
    """Validate and return a master seed (unsigned 64-bit)."""
    seed = int(seed)
    if not 0 <= seed < _MAX_SEED:
        raise ValueError(f"seed must be in [0, 2**64), got {seed}")
    return seed


def substream(master_seed: int, *path: int) -> np.random.Generator:
    """Return the PCG64 generator identified by ``(master_seed, path)``."""
    ss = np.random.SeedSequence(check_seed(master_seed), spawn_key=tuple(int(p) for p in path))
    return np.random.Generator(np.random.PCG64(ss))


def derive_seed(master_seed: int, *path: int) -> int:
    """Collapse ``(master_seed, path)`` to a fresh 64-bit seed.

    Used when a sub-computation (e.g. one Monte Carlo trial) needs its own
    master seed, typically to feed a ``ModelParams``.
    """
    ss = np.random.SeedSequence(check_seed(master_seed), spawn_key=tuple(int(p) for p in path))
    return int(ss.generate_state(1, np.uint64)[0])
