# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled graph kernels.

Same contracts as ``_purepy``; see that module for semantics. Kernels
operate on CSR adjacency (int64 indptr, int32 sorted indices).
"""

import numpy as np


def multi_source_bfs(const long long[::1] indptr, const int[::1] indices,
                     const int[::1] sources, int n):
    dist_arr = np.full(n, -1, dtype=np.int32)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef int[::1] dist = dist_arr
    cdef int[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0, i
    cdef int u, v, d
    cdef long long p
    for i in range(sources.shape[0]):
        u = sources[i]
        if dist[u] == -1:
            dist[u] = 0
            queue[tail] = u
            tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        d = dist[u] + 1
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            if dist[v] == -1:
                dist[v] = d
                queue[tail] = v
                tail += 1
    return dist_arr


def entry_path_bfs(const long long[::1] indptr, const int[::1] indices,
                   int n_backward, int source):
    dist_arr = np.full(n_backward, -1, dtype=np.int32)
    queue_arr = np.empty(n_backward, dtype=np.int32)
    cdef int[::1] dist = dist_arr
    cdef int[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0
    cdef int u, v, d
    cdef long long p
    dist[source] = 0
    queue[tail] = source
    tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        d = dist[u]
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            if v >= n_backward:
                return d + 1
            if dist[v] == -1:
                dist[v] = d + 1
                queue[tail] = v
                tail += 1
    return -1


def count_entry_paths(const long long[::1] indptr, const int[::1] indices,
                      int n_backward, int source, int l_max, long long budget):
    counts_arr = np.zeros(l_max + 1, dtype=np.int64)
    visited_arr = np.zeros(n_backward, dtype=np.uint8)
    stack_node_arr = np.empty(l_max, dtype=np.int32)
    stack_ptr_arr = np.empty(l_max, dtype=np.int64)
    cdef long long[::1] counts = counts_arr
    cdef unsigned char[::1] visited = visited_arr
    cdef int[::1] stack_node = stack_node_arr
    cdef long long[::1] stack_ptr = stack_ptr_arr
    cdef int depth = 1
    cdef long long expansions = 0
    cdef int node, v
    cdef long long ptr
    stack_node[0] = source
    stack_ptr[0] = indptr[source]
    visited[source] = 1
    while depth > 0:
        node = stack_node[depth - 1]
        ptr = stack_ptr[depth - 1]
        if ptr >= indptr[node + 1]:
            visited[node] = 0
            depth -= 1
            continue
        stack_ptr[depth - 1] = ptr + 1
        v = indices[ptr]
        expansions += 1
        if expansions > budget:
            return counts_arr, expansions, True
        if v >= n_backward:
            counts[depth] += 1
        elif visited[v] == 0 and depth < l_max:
            stack_node[depth] = v
            stack_ptr[depth] = indptr[v]
            visited[v] = 1
            depth += 1
    return counts_arr, expansions, False


def connected_within(const long long[::1] indptr, const int[::1] indices,
                     const int[::1] members, int n):
    member_arr = np.zeros(n, dtype=np.uint8)
    seen_arr = np.zeros(n, dtype=np.uint8)
    queue_arr = np.empty(members.shape[0], dtype=np.int32)
    cdef unsigned char[::1] member = member_arr
    cdef unsigned char[::1] seen = seen_arr
    cdef int[::1] queue = queue_arr
    cdef Py_ssize_t i, head = 0, tail = 0
    cdef int u, v, start
    cdef long long p
    cdef Py_ssize_t reached = 1
    for i in range(members.shape[0]):
        member[members[i]] = 1
    start = members[0]
    seen[start] = 1
    queue[tail] = start
    tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            if member[v] and not seen[v]:
                seen[v] = 1
                reached += 1
                queue[tail] = v
                tail += 1
    return reached == members.shape[0]
