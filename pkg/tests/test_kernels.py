"""Cross-backend equivalence: compiled and pure-Python kernels must agree
bit for bit, including budget accounting."""

import numpy as np
import pytest

from bridgegap import ModelParams, gen_model
from bridgegap import _purepy

speedups = pytest.importorskip("bridgegap._speedups")


def graphs():
    cases = [
        ModelParams(n1=2, p1=0.0, n2=1, p2=0.0, bridge_count=0, seed=0),
        ModelParams(n1=30, p1=0.15, n2=10, p2=0.3, bridge_prob=0.02, seed=1),
        ModelParams(n1=80, p1=0.05, n2=20, p2=0.1, bridge_prob=0.0, seed=2),
        ModelParams(n1=120, p1=0.03, n2=30, p2=0.1, bridge_prob=0.005, seed=3),
        ModelParams(n1=15, p1=1.0, n2=5, p2=1.0, bridge_count=75, seed=4),
    ]
    return [gen_model(p) for p in cases]


@pytest.mark.parametrize("g", graphs(), ids=lambda g: f"n{g.n}e{g.num_edges}")
def test_multi_source_bfs_identical(g):
    sources = np.arange(g.n1, g.n, dtype=np.int32)
    a = _purepy.multi_source_bfs(g.indptr, g.indices, sources, g.n)
    b = speedups.multi_source_bfs(g.indptr, g.indices, sources, g.n)
    assert a.dtype == b.dtype
    assert np.array_equal(a, b)


@pytest.mark.parametrize("g", graphs(), ids=lambda g: f"n{g.n}e{g.num_edges}")
def test_entry_bfs_identical(g):
    for u in range(g.n1):
        assert _purepy.entry_path_bfs(g.indptr, g.indices, g.n1, u) == speedups.entry_path_bfs(
            g.indptr, g.indices, g.n1, u
        )


@pytest.mark.parametrize("g", graphs(), ids=lambda g: f"n{g.n}e{g.num_edges}")
def test_count_paths_identical_including_budget(g):
    for u in range(0, g.n1, max(1, g.n1 // 10)):
        for budget in (10**9, 500, 37, 1):
            ca, ea, xa = _purepy.count_entry_paths(g.indptr, g.indices, g.n1, u, 4, budget)
            cb, eb, xb = speedups.count_entry_paths(g.indptr, g.indices, g.n1, u, 4, budget)
            assert np.array_equal(ca, cb)
            assert ea == eb
            assert xa == xb


@pytest.mark.parametrize("g", graphs(), ids=lambda g: f"n{g.n}e{g.num_edges}")
def test_connected_within_identical(g):
    subsets = [
        np.arange(g.n, dtype=np.int32),
        np.arange(g.n1, dtype=np.int32),
        np.arange(g.n1, g.n, dtype=np.int32),
        np.array([0], dtype=np.int32),
    ]
    for members in subsets:
        assert _purepy.connected_within(g.indptr, g.indices, members, g.n) == speedups.connected_within(
            g.indptr, g.indices, members, g.n
        )


@pytest.mark.skipif(
    bool(__import__("os").environ.get("BRIDGEGAP_PURE_PYTHON")),
    reason="fallback forced by environment",
)
def test_dispatch_prefers_compiled():
    from bridgegap import kernels

    assert kernels.BACKEND == "compiled"
    assert kernels.multi_source_bfs is speedups.multi_source_bfs


def test_env_var_forces_python_backend():
    import os
    import subprocess
    import sys

    env = dict(os.environ, BRIDGEGAP_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from bridgegap import kernels; print(kernels.BACKEND)"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert out.stdout.strip() == "python"
