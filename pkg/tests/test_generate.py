import io
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bridgegap import (
    ModelParams,
    ScaleFreeParams,
    classify_edge,
    gen_bridges_count,
    gen_bridges_prob,
    gen_er_block,
    gen_model,
    gen_model_scale_free,
    gen_scale_free,
    write_edge_list,
)
from bridgegap.errors import CountExceedsCapacityError
from bridgegap.generate import _decode_pairs, _encode_pairs, matched_attachment_count
from bridgegap.graph import EdgeClass, edge_class_of
from bridgegap.rng import substream


def test_er_extremes():
    rng = substream(0, 1)
    assert gen_er_block(10, 0.0, rng).shape == (0, 2)
    full = gen_er_block(10, 1.0, substream(0, 2))
    assert full.shape == (45, 2)
    assert len({tuple(e) for e in full.tolist()}) == 45


def test_er_edge_count_matches_binomial_moments():
    # n=100, p=0.1 over 1000 seeds: mean within 3 standard errors of 495
    n, p, seeds = 100, 0.1, 1000
    total_pairs = n * (n - 1) // 2
    counts = np.array(
        [gen_er_block(n, p, substream(123, i)).shape[0] for i in range(seeds)], dtype=float
    )
    expected_mean = total_pairs * p
    var_true = total_pairs * p * (1 - p)
    se_mean = math.sqrt(var_true / seeds)
    assert abs(counts.mean() - expected_mean) <= 3 * se_mean
    se_var = var_true * math.sqrt(2 / (seeds - 1))
    assert abs(counts.var(ddof=1) - var_true) <= 3 * se_var


def test_bridges_prob_extremes_and_moments():
    assert gen_bridges_prob(5, 4, 0.0, substream(0, 1)).shape == (0, 2)
    full = gen_bridges_prob(5, 4, 1.0, substream(0, 1))
    assert full.shape == (20, 2)
    n1, n2, b, seeds = 50, 20, 0.01, 1000
    counts = np.array(
        [gen_bridges_prob(n1, n2, b, substream(7, i)).shape[0] for i in range(seeds)], dtype=float
    )
    se = math.sqrt(n1 * n2 * b * (1 - b) / seeds)
    assert abs(counts.mean() - n1 * n2 * b) <= 3 * se


def test_bridges_count_exact_and_pure():
    edges = gen_bridges_count(10, 10, 5, substream(3, 1))
    assert edges.shape == (5, 2)
    assert len({tuple(e) for e in edges.tolist()}) == 5
    for u, v in edges:
        assert edge_class_of(10, int(u), int(v)) is EdgeClass.BRIDGE
    assert gen_bridges_count(3, 3, 0, substream(3, 2)).shape == (0, 2)
    assert gen_bridges_count(3, 3, 9, substream(3, 3)).shape == (9, 2)
    with pytest.raises(CountExceedsCapacityError):
        gen_bridges_count(3, 3, 10, substream(3, 4))


def test_bridge_prob_edges_all_classify_as_bridges():
    edges = gen_bridges_prob(30, 20, 0.1, substream(11, 0))
    for u, v in edges:
        assert edge_class_of(30, int(u), int(v)) is EdgeClass.BRIDGE


@given(st.integers(2, 400), st.data())
@settings(max_examples=100)
def test_pair_codec_round_trip(n, data):
    total = n * (n - 1) // 2
    k = data.draw(st.integers(0, total - 1))
    pair = _decode_pairs(n, np.array([k], dtype=np.int64))[0]
    i, j = int(pair[0]), int(pair[1])
    assert 0 <= i < j < n
    assert int(_encode_pairs(n, np.array([i]), np.array([j]))[0]) == k


def test_scale_free_clique_seed_only():
    edges = gen_scale_free(ScaleFreeParams(n=4, m=3, seed=0))
    assert edges.shape == (6, 2)


def test_scale_free_deterministic_edge_count():
    edges = gen_scale_free(ScaleFreeParams(n=100, m=3, seed=5))
    assert edges.shape[0] == 6 + 96 * 3


def test_scale_free_tail_exponent_band():
    # rank-size regression on the top decile, averaged over seeds
    n, m, seeds = 2000, 3, 100
    exponents = []
    for s in range(seeds):
        edges = gen_scale_free(ScaleFreeParams(n=n, m=m, seed=s))
        deg = np.bincount(edges.ravel(), minlength=n)
        top = np.sort(deg)[::-1][: n // 10]
        ranks = np.arange(1, top.size + 1)
        slope = np.polyfit(np.log(top), np.log(ranks), 1)[0]
        exponents.append(1.0 - slope)
    mean_exp = float(np.mean(exponents))
    assert 2.1 <= mean_exp <= 3.9


def test_gen_model_complete_blocks():
    g = gen_model(ModelParams(n1=3, p1=1.0, n2=2, p2=1.0, bridge_count=0, seed=1))
    assert g.num_edges == 4
    assert g.edge_class_counts() == (3, 1, 0)
    g = gen_model(ModelParams(n1=3, p1=1.0, n2=2, p2=1.0, bridge_count=1, seed=1))
    assert g.num_edges == 5
    assert g.edge_class_counts()[2] == 1


def test_gen_model_deterministic_serialization():
    params = ModelParams(n1=25, p1=0.2, n2=10, p2=0.3, bridge_prob=0.02, seed=99)
    bufs = []
    for _ in range(2):
        buf = io.StringIO()
        write_edge_list(gen_model(params), buf)
        bufs.append(buf.getvalue())
    assert bufs[0] == bufs[1]


def test_gen_model_fixed_count_lands_exactly():
    for x in (0, 3, 17):
        g = gen_model(ModelParams(n1=12, p1=0.3, n2=6, p2=0.3, bridge_count=x, seed=x))
        assert g.edge_class_counts()[2] == x


def test_scale_free_model_matches_er_density():
    params = ModelParams(n1=500, p1=0.02, n2=100, p2=0.08, bridge_count=10, seed=4)
    g_sf = gen_model_scale_free(params)
    g_er = gen_model(params)
    assert g_sf.edge_class_counts()[2] == 10
    e1_sf, e2_sf, _ = g_sf.edge_class_counts()
    e1_er, e2_er, _ = g_er.edge_class_counts()
    assert abs(e1_sf - e1_er) / e1_er < 0.15
    assert abs(e2_sf - e2_er) / e2_er < 0.25


def test_matched_attachment_count():
    assert matched_attachment_count(2000, 0.004) == 4
    assert matched_attachment_count(10, 0.001) == 1


def test_sf_and_er_share_bridge_draw():
    params = ModelParams(n1=60, p1=0.1, n2=20, p2=0.2, bridge_count=7, seed=13)
    bridges_er = {tuple(e) for e in gen_model(params).edge_array().tolist() if e[0] < 60 <= e[1]}
    bridges_sf = {
        tuple(e) for e in gen_model_scale_free(params).edge_array().tolist() if e[0] < 60 <= e[1]
    }
    assert bridges_er == bridges_sf


def test_params_validation():
    with pytest.raises(ValueError):
        ModelParams(n1=5, p1=1.5, n2=5, p2=0.5, bridge_prob=0.1)
    with pytest.raises(ValueError):
        ModelParams(n1=5, p1=0.5, n2=5, p2=0.5)  # no bridge spec
    with pytest.raises(ValueError):
        ModelParams(n1=5, p1=0.5, n2=5, p2=0.5, bridge_prob=0.1, bridge_count=1)
    with pytest.raises(CountExceedsCapacityError):
        ModelParams(n1=3, p1=0.5, n2=3, p2=0.5, bridge_count=10)
    with pytest.raises(ValueError):
        ScaleFreeParams(n=3, m=3)


def test_sparse_regime_flag():
    assert ModelParams(n1=10, p1=0.5, n2=10, p2=0.5, bridge_prob=0.2).outside_sparse_regime
    assert not ModelParams(n1=10, p1=0.5, n2=10, p2=0.5, bridge_prob=0.01).outside_sparse_regime
