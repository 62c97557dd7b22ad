import pytest

from bridgegap import ModelParams, build, gen_model


@pytest.fixture
def path3():
    """Chain 0-1-2 with n1=2 (nodes 0, 1) and n2=1 (node 2)."""
    return build(2, 1, [(0, 1), (1, 2)])


@pytest.fixture
def complete_4_2():
    """Complete backward block on 4 nodes, complete bridges to 2 forward nodes."""
    return gen_model(ModelParams(n1=4, p1=1.0, n2=2, p2=1.0, bridge_count=8, seed=0))


def random_model(seed, n1=40, n2=12, p1=0.1, p2=0.2, b=0.05):
    return gen_model(ModelParams(n1=n1, p1=p1, n2=n2, p2=p2, bridge_prob=b, seed=seed))
