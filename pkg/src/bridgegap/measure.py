"""Exact measurement on a concrete graph.

Social distance of a backward node is its graph distance to the nearest
forward node, computed for all backward nodes at once by one multi-source
BFS seeded at every forward node. ``entry_path_distance`` computes the
same quantity per node along entry paths only (BFS that never expands
forward nodes); the two agree on every graph and serve as each other's
oracle in the validation suite.

Unreachable nodes are kept explicit (absent from ``per_node``, collected
in ``unreachable``) rather than encoded as a sentinel distance, because
at small bridge counts disconnection is the common case and silent
sentinels would corrupt aggregate curves.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import BudgetExceededError, IndexOutOfRangeError, NoForwardNodesError
from .graph import CommunityGraph

DEFAULT_EXPANSION_BUDGET = 100_000_000


def node_capital(dstar: int | None) -> float:
    """Social capital of one node: 1/d*, or 0 when unreachable.

    The only place the capital functional form lives; everything else
    aggregates this.
    """
    if dstar is None:
        return 0.0
    return 1.0 / dstar


@dataclass(frozen=True)
class SocialDistanceReport:
    """Per-node social distances plus their standard aggregates."""

    n1: int
    per_node: dict[int, int]
    unreachable: frozenset[int]
    mean_dstar: float | None
    histogram: dict[int, int]
    cumulative_capital: float

    @property
    def unreachable_count(self) -> int:
        return len(self.unreachable)

    def dstar_of(self, u: int) -> int | None:
        return self.per_node.get(u)


@dataclass(frozen=True)
class EntryPathStats:
    """Exact entry-path counts by length from one source node."""

    source: int
    counts: dict[int, int]
    max_length_enumerated: int

    @property
    def first_positive_length(self) -> int | None:
        hits = [l for l, c in sorted(self.counts.items()) if c > 0]
        return hits[0] if hits else None


def _check_backward_node(g: CommunityGraph, u: int) -> int:
    u = int(u)
    if not 0 <= u < g.n1:
        raise IndexOutOfRangeError(f"node {u} is not a backward-community node (n1={g.n1})")
    return u


def social_distances(g: CommunityGraph) -> SocialDistanceReport:
    """Social distance of every backward node via one multi-source BFS."""
    if g.n2 == 0:
        raise NoForwardNodesError("graph has no forward-community nodes")
    sources = np.arange(g.n1, g.n, dtype=np.int32)
    dist = kernels.multi_source_bfs(g.indptr, g.indices, sources, g.n)
    bc = dist[: g.n1]
    reachable = bc >= 0
    dists = bc[reachable].astype(np.int64)
    per_node = {int(u): int(d) for u, d in zip(np.nonzero(reachable)[0], dists)}
    unreachable = frozenset(int(u) for u in np.nonzero(~reachable)[0])
    if dists.size:
        mean = float(dists.mean())
        hist_counts = np.bincount(dists)
        histogram = {int(l): int(c) for l, c in enumerate(hist_counts) if c > 0}
        capital = float((1.0 / dists).sum())
    else:
        mean = None
        histogram = {}
        capital = 0.0
    return SocialDistanceReport(
        n1=g.n1,
        per_node=per_node,
        unreachable=unreachable,
        mean_dstar=mean,
        histogram=histogram,
        cumulative_capital=capital,
    )


def entry_path_distance(g: CommunityGraph, u: int) -> int | None:
    """Length of the shortest entry path from u, or None if none exists."""
    u = _check_backward_node(g, u)
    d = kernels.entry_path_bfs(g.indptr, g.indices, g.n1, u)
    return None if d < 0 else int(d)


def count_entry_paths(
    g: CommunityGraph,
    u: int,
    l_max: int,
    budget: int = DEFAULT_EXPANSION_BUDGET,
) -> EntryPathStats:
    """Exact count of simple entry paths of each length l <= l_max from u.

    Depth-first enumeration over backward-only prefixes; exponential in
    the worst case, so an expansion budget bounds the work and a blown
    budget raises BudgetExceededError instead of returning partial counts.
    """
    u = _check_backward_node(g, u)
    if l_max < 1:
        raise ValueError("l_max must be at least 1")
    if budget < 1:
        raise ValueError("budget must be positive")
    counts, expansions, exhausted = kernels.count_entry_paths(
        g.indptr, g.indices, g.n1, u, int(l_max), int(budget)
    )
    if exhausted:
        raise BudgetExceededError(f"expansion budget {budget} exhausted at node {u}")
    return EntryPathStats(
        source=u,
        counts={l: int(counts[l]) for l in range(1, l_max + 1)},
        max_length_enumerated=int(l_max),
    )


def cumulative_capital(report: SocialDistanceReport) -> float:
    """Sum of node capital over all backward nodes."""
    total = sum(node_capital(d) for d in report.per_node.values())
    return float(total)
