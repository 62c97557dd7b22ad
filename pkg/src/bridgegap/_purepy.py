"""Pure-Python graph kernels.

Fallback implementation used when the compiled extension is unavailable
(or when ``BRIDGEGAP_PURE_PYTHON`` is set).  Must stay behaviorally
identical to ``_speedups.pyx``, including budget accounting, so the two
backends are interchangeable bit for bit.

All kernels operate on CSR adjacency: ``indptr`` (int64, length n+1) and
``indices`` (int32, neighbor lists sorted ascending per row).
"""

from __future__ import annotations

import numpy as np


def multi_source_bfs(indptr, indices, sources, n):
    """Distances from the nearest source node; -1 where unreachable."""
    iptr = indptr.tolist()
    idx = indices.tolist()
    dist_arr = np.full(n, -1, dtype=np.int32)
    dist = dist_arr.tolist()
    queue = [0] * n
    tail = 0
    for u in sources.tolist():
        if dist[u] == -1:
            dist[u] = 0
            queue[tail] = u
            tail += 1
    head = 0
    while head < tail:
        u = queue[head]
        head += 1
        d = dist[u] + 1
        for p in range(iptr[u], iptr[u + 1]):
            v = idx[p]
            if dist[v] == -1:
                dist[v] = d
                queue[tail] = v
                tail += 1
    dist_arr[:] = dist
    return dist_arr


def entry_path_bfs(indptr, indices, n_backward, source):
    """Shortest entry-path length from a backward node, or -1.

    BFS that never expands forward-community nodes: the first forward
    neighbor seen closes the shortest entry path.
    """
    iptr = indptr.tolist()
    idx = indices.tolist()
    dist = [-1] * n_backward
    dist[source] = 0
    queue = [source]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        d = dist[u]
        for p in range(iptr[u], iptr[u + 1]):
            v = idx[p]
            if v >= n_backward:
                return d + 1
            if dist[v] == -1:
                dist[v] = d + 1
                queue.append(v)
    return -1


def count_entry_paths(indptr, indices, n_backward, source, l_max, budget):
    """Exact simple entry-path counts by length, via DFS over backward prefixes.

    Returns ``(counts, expansions, exhausted)`` where ``counts[l]`` is the
    number of entry paths of length ``l`` (index 0 unused), ``expansions``
    is the number of edge traversals performed, and ``exhausted`` flags a
    blown budget (counts are then partial and must be discarded).
    """
    iptr = indptr.tolist()
    idx = indices.tolist()
    counts_arr = np.zeros(l_max + 1, dtype=np.int64)
    counts = counts_arr.tolist()
    visited = bytearray(n_backward)
    stack_node = [0] * l_max
    stack_ptr = [0] * l_max
    stack_node[0] = source
    stack_ptr[0] = iptr[source]
    visited[source] = 1
    depth = 1
    expansions = 0
    while depth > 0:
        node = stack_node[depth - 1]
        ptr = stack_ptr[depth - 1]
        if ptr >= iptr[node + 1]:
            visited[node] = 0
            depth -= 1
            continue
        stack_ptr[depth - 1] = ptr + 1
        v = idx[ptr]
        expansions += 1
        if expansions > budget:
            counts_arr[:] = counts
            return counts_arr, expansions, True
        if v >= n_backward:
            counts[depth] += 1
        elif not visited[v] and depth < l_max:
            stack_node[depth] = v
            stack_ptr[depth] = iptr[v]
            visited[v] = 1
            depth += 1
    counts_arr[:] = counts
    return counts_arr, expansions, False


def connected_within(indptr, indices, members, n):
    """True iff the subgraph induced on ``members`` is connected."""
    iptr = indptr.tolist()
    idx = indices.tolist()
    mem = members.tolist()
    member = bytearray(n)
    for u in mem:
        member[u] = 1
    seen = bytearray(n)
    start = mem[0]
    seen[start] = 1
    queue = [start]
    head = 0
    reached = 1
    while head < len(queue):
        u = queue[head]
        head += 1
        for p in range(iptr[u], iptr[u + 1]):
            v = idx[p]
            if member[v] and not seen[v]:
                seen[v] = 1
                reached += 1
                queue.append(v)
    return reached == len(mem)
