import hypothesis.strategies as st
import pytest

from nonsep.graph import Graph


def necklace(k, q):
    """k cliques K_q in a ring; clique i's vertex 0 is joined to clique i+1's vertex 1."""
    edges = []
    for i in range(k):
        base = i * q
        edges += [(base + a, base + b) for a in range(q) for b in range(a + 1, q)]
    for i in range(k):
        edges.append((i * q, ((i + 1) % k) * q + 1))
    return Graph(k * q, edges)


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


@pytest.fixture
def bowtie():
    return Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
