"""Random-graph generators for the two-community model.

The model composes three independent pieces: an Erdos-Renyi block on the
backward community, one on the forward community, and a set of bridges
across the partition, drawn either per-pair with a bridging probability
or as an exact uniform sample of a fixed bridge count. A preferential
attachment variant substitutes scale-free blocks at matched density.

Edge sampling uses geometric skipping over the linearized pair space
(Batagelj-Brandes), so cost scales with the number of edges drawn rather
than with the number of candidate pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CountExceedsCapacityError
from .graph import CommunityGraph, build
from .rng import STREAM_BLOCK1, STREAM_BLOCK2, STREAM_BRIDGES, check_seed, substream


@dataclass(frozen=True)
class ModelParams:
    """Parameters of one two-community graph draw.

    Exactly one of ``bridge_prob`` (independent per cross pair) or
    ``bridge_count`` (exact uniform sample) must be given. The draw is a
    pure function of the parameters including ``seed``.
    """

    n1: int
    p1: float
    n2: int
    p2: float
    bridge_prob: float | None = None
    bridge_count: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1:
            raise ValueError("community sizes must be at least 1")
        for name, p in (("p1", self.p1), ("p2", self.p2)):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {p}")
        if (self.bridge_prob is None) == (self.bridge_count is None):
            raise ValueError("exactly one of bridge_prob / bridge_count required")
        if self.bridge_prob is not None and not 0.0 <= self.bridge_prob <= 1.0:
            raise ValueError(f"bridge_prob must be in [0, 1], got {self.bridge_prob}")
        if self.bridge_count is not None:
            if self.bridge_count < 0:
                raise ValueError("bridge_count must be non-negative")
            if self.bridge_count > self.n1 * self.n2:
                raise CountExceedsCapacityError(
                    f"bridge_count {self.bridge_count} exceeds {self.n1 * self.n2} cross pairs"
                )
        check_seed(self.seed)

    @property
    def effective_bridge_prob(self) -> float:
        """The bridging probability, or its fixed-count equivalent x/(n1*n2)."""
        if self.bridge_prob is not None:
            return self.bridge_prob
        return self.bridge_count / (self.n1 * self.n2)

    @property
    def outside_sparse_regime(self) -> bool:
        """True when b >= 1/n2, i.e. a backward node expects >= 1 bridge."""
        return self.effective_bridge_prob * self.n2 >= 1.0


@dataclass(frozen=True)
class ScaleFreeParams:
    """Preferential-attachment parameters: n nodes, m edges per arrival."""

    n: int
    m: int
    seed: int = 0

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be at least 1")
        if self.m >= self.n:
            raise ValueError(f"m={self.m} must be smaller than n={self.n}")
        check_seed(self.seed)


def _encode_pairs(n: int, i: np.ndarray, j: np.ndarray) -> np.ndarray:
    """Lexicographic rank of pairs (i, j) with i < j among C(n, 2)."""
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def _decode_pairs(n: int, k: np.ndarray) -> np.ndarray:
    """Inverse of ``_encode_pairs``; returns an (m, 2) array."""
    kf = k.astype(np.float64)
    tn = 2.0 * n - 1.0
    i = np.floor((tn - np.sqrt(tn * tn - 8.0 * kf)) / 2.0).astype(np.int64)
    # float sqrt can land one row off at block boundaries
    row_start = i * (2 * n - i - 1) // 2
    too_far = row_start > k
    i[too_far] -= 1
    row_start = i * (2 * n - i - 1) // 2
    next_start = (i + 1) * (2 * n - i - 2) // 2
    undershoot = k >= next_start
    i[undershoot] += 1
    row_start = i * (2 * n - i - 1) // 2
    j = k - row_start + i + 1
    return np.column_stack((i, j))


def _bernoulli_indices(total: int, p: float, rng: np.random.Generator) -> np.ndarray:
    """Indices of an independent Bernoulli(p) subset of range(total).

    Geometric skip sampling: cost is O(p * total) draws instead of one
    uniform per candidate.
    """
    if total <= 0 or p <= 0.0:
        return np.empty(0, dtype=np.int64)
    if p >= 1.0:
        return np.arange(total, dtype=np.int64)
    chunks = []
    pos = -1
    while pos < total:
        want = max(256, int((total - pos) * p * 1.2) + 32)
        gaps = rng.geometric(p, size=want)
        positions = pos + np.cumsum(gaps)
        pos = int(positions[-1])
        chunks.append(positions[positions < total])
    return np.concatenate(chunks) if chunks else np.empty(0, dtype=np.int64)


def _sample_indices(total: int, k: int, rng: np.random.Generator) -> np.ndarray:
    """k distinct uniform indices from range(total), unordered."""
    if k > total:
        raise CountExceedsCapacityError(f"cannot sample {k} of {total}")
    if k == 0:
        return np.empty(0, dtype=np.int64)
    if total <= 1 << 20 or k * 4 >= total:
        return rng.permutation(total)[:k].astype(np.int64)
    # rejection sampling; fast when k << total
    picked = np.unique(rng.integers(0, total, size=int(k * 1.2) + 16))
    while picked.size < k:
        extra = rng.integers(0, total, size=k)
        picked = np.unique(np.concatenate((picked, extra)))
    return rng.permutation(picked)[:k]


def gen_er_block(n: int, p: float, rng: np.random.Generator) -> np.ndarray:
    """Erdos-Renyi G(n, p) edges over local indices 0..n-1."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    total = n * (n - 1) // 2
    k = _bernoulli_indices(total, p, rng)
    if k.size == 0:
        return np.empty((0, 2), dtype=np.int64)
    return _decode_pairs(n, k)


def _bridge_pairs(n1: int, n2: int, k: np.ndarray) -> np.ndarray:
    """Decode linear cross-pair indices to global (backward, forward) pairs."""
    if k.size == 0:
        return np.empty((0, 2), dtype=np.int64)
    return np.column_stack((k // n2, n1 + k % n2))


def gen_bridges_prob(n1: int, n2: int, b: float, rng: np.random.Generator) -> np.ndarray:
    """Each of the n1*n2 cross pairs becomes a bridge independently w.p. b."""
    if not 0.0 <= b <= 1.0:
        raise ValueError(f"b must be in [0, 1], got {b}")
    return _bridge_pairs(n1, n2, _bernoulli_indices(n1 * n2, b, rng))


def gen_bridges_count(n1: int, n2: int, x: int, rng: np.random.Generator) -> np.ndarray:
    """Exactly x distinct bridges, uniform over the n1*n2 cross pairs."""
    total = n1 * n2
    if x < 0:
        raise ValueError("x must be non-negative")
    if x > total:
        raise CountExceedsCapacityError(f"x={x} exceeds {total} cross pairs")
    return _bridge_pairs(n1, n2, _sample_indices(total, x, rng))


def gen_scale_free(params: ScaleFreeParams, rng: np.random.Generator | None = None) -> np.ndarray:
    """Preferential-attachment edges over local indices 0..n-1.

    Starts from a clique on m+1 nodes; each later node attaches to m
    distinct existing nodes chosen with probability proportional to
    current degree (sampling endpoints of existing edges).
    """
    if rng is None:
        rng = substream(params.seed, STREAM_BLOCK1)
    n, m = params.n, params.m
    edges: list[tuple[int, int]] = []
    repeated: list[int] = []
    for i in range(m + 1):
        for j in range(i + 1, m + 1):
            edges.append((i, j))
            repeated.append(i)
            repeated.append(j)
    for v in range(m + 1, n):
        targets: set[int] = set()
        while len(targets) < m:
            targets.add(repeated[int(rng.integers(0, len(repeated)))])
        chosen = sorted(targets)
        for t in chosen:
            edges.append((t, v))
        repeated.extend(chosen)
        repeated.extend([v] * m)
    return np.asarray(edges, dtype=np.int64)


def _compose(n1: int, n2: int, e1: np.ndarray, e2: np.ndarray, bridges: np.ndarray) -> CommunityGraph:
    e2 = e2 + n1 if e2.size else e2.reshape(0, 2)
    parts = [a for a in (e1, e2, bridges) if a.size]
    edges = np.vstack(parts) if parts else np.empty((0, 2), dtype=np.int64)
    return build(n1, n2, edges)


def _draw_bridges(params: ModelParams, rng: np.random.Generator) -> np.ndarray:
    if params.bridge_prob is not None:
        return gen_bridges_prob(params.n1, params.n2, params.bridge_prob, rng)
    return gen_bridges_count(params.n1, params.n2, params.bridge_count, rng)


def gen_model(params: ModelParams) -> CommunityGraph:
    """Draw the two-community model graph: ER blocks plus bridges.

    Deterministic in ``params``: the three components are drawn from
    fixed substreams (block1, block2, bridges) of the master seed.
    """
    e1 = gen_er_block(params.n1, params.p1, substream(params.seed, STREAM_BLOCK1))
    e2 = gen_er_block(params.n2, params.p2, substream(params.seed, STREAM_BLOCK2))
    bridges = _draw_bridges(params, substream(params.seed, STREAM_BRIDGES))
    return _compose(params.n1, params.n2, e1, e2, bridges)


def matched_attachment_count(n: int, p: float) -> int:
    """Attachment count giving a PA block the expected ER(n, p) edge count."""
    return max(1, min(n - 1, round(n * p / 2)))


def gen_model_scale_free(
    params: ModelParams, m1: int | None = None, m2: int | None = None
) -> CommunityGraph:
    """Model variant with preferential-attachment blocks.

    Block densities are matched to the ER counterpart by default
    (m = round(n*p/2)), so order and size stay comparable across
    substrates. Bridges use the same substream as ``gen_model``: with a
    fixed bridge count and equal seeds, the two substrates receive the
    identical bridge set.
    """
    if m1 is None:
        m1 = matched_attachment_count(params.n1, params.p1)
    if m2 is None:
        m2 = matched_attachment_count(params.n2, params.p2)
    e1 = gen_scale_free(
        ScaleFreeParams(n=params.n1, m=m1, seed=params.seed),
        substream(params.seed, STREAM_BLOCK1),
    )
    e2 = gen_scale_free(
        ScaleFreeParams(n=params.n2, m=m2, seed=params.seed),
        substream(params.seed, STREAM_BLOCK2),
    )
    bridges = _draw_bridges(params, substream(params.seed, STREAM_BRIDGES))
    return _compose(params.n1, params.n2, e1, e2, bridges)
