"""Seeded graph generators.

All randomness comes from SplitMix64 (Steele, Lea & Flood 2014) so that a
``(parameters, seed)`` pair yields the same graph in any implementation:

* ``next_u64``: ``state += 0x9E3779B97F4A7C15``; then the standard
  xor-shift/multiply finaliser on a copy of the state.
* ``below(k)``: draw ``x = next_u64()``, reject while ``x < (2**64 - k) % k``,
  return ``x % k`` (unbiased).
* ``shuffle``: Fisher-Yates from the last index down, swapping ``i`` with
  ``below(i + 1)``.
"""

from __future__ import annotations

from .graph import Graph

MASK64 = (1 << 64) - 1


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("below() needs a positive bound")
        threshold = ((1 << 64) - k) % k
        while True:
            x = self.next_u64()
            if x >= threshold:
                return x % k

    def random(self) -> float:
        """Uniform float in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def gen_hypothesis_graph(n: int, min_deg: int, seed: int) -> Graph:
    """2-connected graph on ``n`` vertices with minimum degree >= ``min_deg``.

    A Hamiltonian cycle on a shuffled vertex order gives 2-connectivity.
    Then, while some vertex has degree below ``min_deg``, pick one of the
    minimum-degree vertices uniformly (in id order) and join it to a uniform
    non-neighbour (in id order).
    """
    if min_deg < 2 or n < 3:
        raise ValueError(f"need min_deg >= 2 and n >= 3 (got n={n}, min_deg={min_deg})")
    if min_deg >= n:
        raise ValueError(f"min_deg={min_deg} infeasible on n={n} vertices")
    rng = SplitMix64(seed)
    order = list(range(n))
    rng.shuffle(order)
    adj: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        a, b = order[i], order[(i + 1) % n]
        adj[a].add(b)
        adj[b].add(a)
    while True:
        low = min(len(s) for s in adj)
        if low >= min_deg:
            break
        lows = [v for v in range(n) if len(adj[v]) == low]
        v = lows[rng.below(len(lows))]
        free = [w for w in range(n) if w != v and w not in adj[v]]
        w = free[rng.below(len(free))]
        adj[v].add(w)
        adj[w].add(v)
    return Graph(n, ((u, w) for u in range(n) for w in adj[u] if u < w))


def gen_random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); pairs visited in ``(u, v), u < v`` lexicographic order."""
    rng = SplitMix64(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)
