import pytest
from hypothesis import given, settings, strategies as st

from nonsep.connectivity import is_biconnected
from nonsep.generate import SplitMix64, gen_hypothesis_graph, gen_random_graph
from nonsep.graph import complete_graph, serialize_graph6


def test_splitmix64_reference_stream():
    # published reference outputs for seed 0
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_below_is_in_range_and_covers():
    rng = SplitMix64(42)
    seen = {rng.below(5) for _ in range(200)}
    assert seen == set(range(5))
    with pytest.raises(ValueError):
        rng.below(0)


def test_k5_is_forced():
    for seed in (0, 1, 2**63 + 5):
        assert gen_hypothesis_graph(5, 4, seed) == complete_graph(5)


def test_seeded_instance_meets_hypotheses():
    g = gen_hypothesis_graph(8, 6, 1)
    assert g.min_degree() >= 6
    assert is_biconnected(g)


@pytest.mark.parametrize("n,d", [(3, 3), (4, 4), (5, 1), (2, 2)])
def test_infeasible_parameters(n, d):
    with pytest.raises(ValueError):
        gen_hypothesis_graph(n, d, 0)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 24), st.integers(2, 23), st.integers(0, 2**64 - 1))
def test_generator_postconditions(n, d, seed):
    if d >= n:
        return
    g = gen_hypothesis_graph(n, d, seed)
    assert g.n == n and g.min_degree() >= d
    assert is_biconnected(g)
    assert serialize_graph6(g) == serialize_graph6(gen_hypothesis_graph(n, d, seed))


def test_random_graph_deterministic():
    assert gen_random_graph(9, 0.4, 3) == gen_random_graph(9, 0.4, 3)
    assert gen_random_graph(6, 1.0, 0) == complete_graph(6)
    assert gen_random_graph(6, 0.0, 0).m == 0
