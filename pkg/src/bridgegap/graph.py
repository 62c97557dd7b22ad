"""Two-community graph with classified edges.

Nodes are indexed 0..n1+n2-1. The first n1 indices form the backward
community (BC, node set V1) and the remaining n2 the forward community
(FC, V2), so the class of an edge is a pure function of its endpoint
indices: within-BC, within-FC, or a bridge straddling the two. Graphs
are immutable once built and safe to share read-only across processes.

Adjacency is stored CSR-style with sorted neighbor lists, which keeps
traversal deterministic and the serialized form canonical.
"""

from __future__ import annotations

import enum
import io
import re
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable

import numpy as np

from . import kernels
from .errors import (
    DuplicateEdgeError,
    EdgeListFormatError,
    EmptySubsetError,
    IndexOutOfRangeError,
    NotAnEdgeError,
    SelfLoopError,
)

EDGE_LIST_MAGIC = "# bridgegap-graph v1"
_HEADER_RE = re.compile(r"^# n1=(\d+) n2=(\d+)$")


class EdgeClass(enum.Enum):
    INTRA1 = "intra1"
    INTRA2 = "intra2"
    BRIDGE = "bridge"


@dataclass(frozen=True)
class CommunityGraph:
    """Immutable undirected graph over a two-class node partition."""

    n1: int
    n2: int
    indptr: np.ndarray
    indices: np.ndarray

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    @property
    def num_edges(self) -> int:
        return self.indices.size // 2

    def check_node(self, u: int) -> int:
        u = int(u)
        if not 0 <= u < self.n:
            raise IndexOutOfRangeError(f"node {u} outside [0, {self.n})")
        return u

    def neighbors(self, u: int) -> np.ndarray:
        u = self.check_node(u)
        return self.indices[self.indptr[u] : self.indptr[u + 1]]

    def degree(self, u: int) -> int:
        u = self.check_node(u)
        return int(self.indptr[u + 1] - self.indptr[u])

    def has_edge(self, u: int, v: int) -> bool:
        u = self.check_node(u)
        v = self.check_node(v)
        row = self.neighbors(u)
        pos = np.searchsorted(row, v)
        return pos < row.size and row[pos] == v

    def edge_array(self) -> np.ndarray:
        """All edges as an (m, 2) array with u < v, lexicographically sorted."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.indptr))
        dst = self.indices.astype(np.int64)
        mask = src < dst
        return np.column_stack((src[mask], dst[mask]))

    def edge_class_counts(self) -> tuple[int, int, int]:
        """Return (|E1|, |E2|, |B|)."""
        edges = self.edge_array()
        if edges.size == 0:
            return (0, 0, 0)
        intra1 = int(np.count_nonzero(edges[:, 1] < self.n1))
        intra2 = int(np.count_nonzero(edges[:, 0] >= self.n1))
        return (intra1, intra2, self.num_edges - intra1 - intra2)


def build(n1: int, n2: int, edges: Iterable[tuple[int, int]]) -> CommunityGraph:
    """Construct a CommunityGraph from explicit edges.

    Raises IndexOutOfRangeError, SelfLoopError or DuplicateEdgeError on
    invalid input; duplicates are an error rather than silently merged so
    that generators stay correct by construction.
    """
    n1, n2 = int(n1), int(n2)
    if n1 < 0 or n2 < 0:
        raise ValueError("community sizes must be non-negative")
    n = n1 + n2
    e = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
    if e.size == 0:
        e = e.reshape(0, 2)
    if e.ndim != 2 or e.shape[1] != 2:
        raise ValueError("edges must be pairs of node indices")

    if e.size:
        out = (e < 0) | (e >= n)
        if out.any():
            bad = e[out.any(axis=1)][0]
            raise IndexOutOfRangeError(f"edge ({bad[0]}, {bad[1]}) outside [0, {n})")
        loops = e[:, 0] == e[:, 1]
        if loops.any():
            raise SelfLoopError(f"self-loop at node {e[loops][0][0]}")
        lo = np.minimum(e[:, 0], e[:, 1])
        hi = np.maximum(e[:, 0], e[:, 1])
        key = lo * n + hi
        order = np.argsort(key, kind="stable")
        dup = np.nonzero(np.diff(key[order]) == 0)[0]
        if dup.size:
            i = order[dup[0]]
            raise DuplicateEdgeError(f"duplicate edge ({lo[i]}, {hi[i]})")
    else:
        lo = hi = e[:, 0]

    src = np.concatenate((lo, hi))
    dst = np.concatenate((hi, lo))
    degrees = np.bincount(src, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(degrees, out=indptr[1:])
    perm = np.lexsort((dst, src))
    indices = dst[perm].astype(np.int32)
    indptr.setflags(write=False)
    indices.setflags(write=False)
    return CommunityGraph(n1=n1, n2=n2, indptr=indptr, indices=indices)


def edge_class_of(n1: int, u: int, v: int) -> EdgeClass:
    """Class of the pair (u, v) from indices alone, no existence check."""
    below = (u < n1) + (v < n1)
    if below == 2:
        return EdgeClass.INTRA1
    if below == 0:
        return EdgeClass.INTRA2
    return EdgeClass.BRIDGE


def classify_edge(g: CommunityGraph, u: int, v: int) -> EdgeClass:
    """Class of an existing edge; NotAnEdgeError if {u, v} is absent."""
    u = g.check_node(u)
    v = g.check_node(v)
    if not g.has_edge(u, v):
        raise NotAnEdgeError(f"({u}, {v}) is not an edge")
    return edge_class_of(g.n1, u, v)


def is_connected(g: CommunityGraph, restrict: Iterable[int] | None = None) -> bool:
    """True iff the graph (or the induced subgraph on ``restrict``) is connected."""
    if restrict is None:
        if g.n == 0:
            return True
        members = np.arange(g.n, dtype=np.int32)
    else:
        members = np.unique(np.asarray(list(restrict), dtype=np.int64))
        if members.size == 0:
            raise EmptySubsetError("restriction set is empty")
        if members[0] < 0 or members[-1] >= g.n:
            raise IndexOutOfRangeError("restriction set contains invalid nodes")
        members = members.astype(np.int32)
    if members.size == 1:
        return True
    return bool(kernels.connected_within(g.indptr, g.indices, members, g.n))


def write_edge_list(g: CommunityGraph, dest: str | Path | IO[str]) -> None:
    """Serialize to the canonical edge-list text format."""
    buf = io.StringIO()
    buf.write(f"{EDGE_LIST_MAGIC}\n")
    buf.write(f"# n1={g.n1} n2={g.n2}\n")
    for u, v in g.edge_array():
        buf.write(f"{u} {v}\n")
    text = buf.getvalue()
    if isinstance(dest, (str, Path)):
        Path(dest).write_text(text, encoding="utf-8")
    else:
        dest.write(text)


def read_edge_list(src: str | Path | IO[str]) -> CommunityGraph:
    """Parse the canonical edge-list format; rejects any other header."""
    if isinstance(src, (str, Path)):
        text = Path(src).read_text(encoding="utf-8")
    else:
        text = src.read()
    lines = text.splitlines()
    if not lines or lines[0] != EDGE_LIST_MAGIC:
        raise EdgeListFormatError(f"missing magic header {EDGE_LIST_MAGIC!r}")
    if len(lines) < 2:
        raise EdgeListFormatError("missing size header")
    m = _HEADER_RE.match(lines[1])
    if m is None:
        raise EdgeListFormatError(f"bad size header {lines[1]!r}")
    n1, n2 = int(m.group(1)), int(m.group(2))
    edges = []
    for lineno, line in enumerate(lines[2:], start=3):
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise EdgeListFormatError(f"line {lineno}: non-integer endpoint") from exc
        edges.append((u, v))
    return build(n1, n2, edges)
