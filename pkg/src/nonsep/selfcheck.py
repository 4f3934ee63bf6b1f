"""Definition-level brute force references and the built-in invariant suites.

The brute-force helpers work on vertex bitmasks and are meant for n <= ~12.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from . import connectivity, embed
from . import graph as graph_mod
from .embed import TreeSpec
from .generate import SplitMix64, gen_hypothesis_graph, gen_random_graph
from .graph import Graph, complete_graph, cycle_graph, path_graph, petersen_graph


def _masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in a) for a in g.adj]


def connected_table(g: Graph) -> list[bool]:
    """``table[S]`` says whether the subgraph induced by bitmask S is connected (empty: True)."""
    adj = _masks(g)
    table = [True] * (1 << g.n)
    for s in range(1, 1 << g.n):
        reach = s & -s
        frontier = reach
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            nxt &= s & ~reach
            reach |= nxt
            frontier = nxt
        table[s] = reach == s
    return table


def brute_blocks(g: Graph, table: list[bool] | None = None) -> list[tuple[int, ...]]:
    """Maximal vertex sets inducing a connected subgraph with no cut vertex."""
    table = connected_table(g) if table is None else table
    maximal: list[int] = []
    # largest first, so a set is maximal iff no earlier maximal set contains it
    for s in sorted(range(1, 1 << g.n), key=lambda x: -bin(x).count("1")):
        if not table[s] or any(t & s == s for t in maximal):
            continue
        if bin(s).count("1") >= 3:
            bits = s
            ok = True
            while bits:
                low = bits & -bits
                if not table[s ^ low]:
                    ok = False
                    break
                bits ^= low
            if not ok:
                continue
        maximal.append(s)
    return sorted(tuple(v for v in range(g.n) if s >> v & 1) for s in maximal)


def _n_components(g: Graph, alive: int) -> int:
    return len(connectivity.connected_components(g, [bool(alive >> v & 1) for v in range(g.n)]))


def brute_cut_vertices(g: Graph) -> list[int]:
    full = (1 << g.n) - 1
    base = _n_components(g, full)
    return [v for v in range(g.n) if _n_components(g, full ^ (1 << v)) > base]


def brute_k_connected(g: Graph, k: int, table: list[bool] | None = None) -> bool:
    """Remove every set of at most k-1 vertices and test connectivity."""
    if g.n <= k:
        return False
    table = connected_table(g) if table is None else table
    full = (1 << g.n) - 1
    for size in range(k):
        for sep in combinations(range(g.n), size):
            if not table[full & ~sum(1 << v for v in sep)]:
                return False
    return True


def brute_double_star_exists(g: Graph, u: int, v: int, r: int, s: int, forbidden=()) -> bool:
    """Try every leaf assignment with r leaves at u and s at v."""
    bad = set(forbidden) | {u, v}
    a = [x for x in g.adj[u] if x not in bad]
    c = [x for x in g.adj[v] if x not in bad]
    for ul in combinations(a, r):
        taken = set(ul)
        for _ in combinations([x for x in c if x not in taken], s):
            return True
    return False


# -- corpora -------------------------------------------------------------------


def named_graphs() -> list[Graph]:
    bowtie = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    return [
        Graph(0), Graph(1), Graph(2), Graph(2, [(0, 1)]),
        path_graph(3), path_graph(4), cycle_graph(5), cycle_graph(6),
        complete_graph(4), complete_graph(5), bowtie, petersen_graph(),
    ]


def random_small_graphs(count: int, seed: int, max_n: int = 10) -> list[Graph]:
    rng = SplitMix64(seed)
    out = []
    for i in range(count):
        n = 1 + rng.below(max_n)
        p = 0.1 + 0.8 * rng.random()
        out.append(gen_random_graph(n, p, seed * 1_000_003 + i))
    return out


# -- suites --------------------------------------------------------------------


@dataclass
class SuiteResult:
    name: str
    checked: int
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures and self.checked > 0


def suite_blocks(graphs: list[Graph]) -> SuiteResult:
    fails = []
    for g in graphs:
        table = connected_table(g)
        if connectivity.blocks(g) != brute_blocks(g, table):
            fails.append(f"blocks mismatch on {graph_mod.serialize_graph6(g)}")
        if connectivity.cut_vertices(g) != brute_cut_vertices(g):
            fails.append(f"cut vertices mismatch on {graph_mod.serialize_graph6(g)}")
        if g.n and connectivity.is_biconnected(g) != connectivity.is_k_connected(g, 2):
            fails.append(f"is_biconnected disagrees with is_k_connected(2) on {graph_mod.serialize_graph6(g)}")
    return SuiteResult("blocks/cut vertices vs brute force", len(graphs), fails)


def suite_k_connectivity(graphs: list[Graph], kmax: int = 4) -> SuiteResult:
    fails = []
    for g in graphs:
        table = connected_table(g)
        for k in range(1, kmax + 1):
            if connectivity.is_k_connected(g, k) != brute_k_connected(g, k, table):
                fails.append(f"is_k_connected(k={k}) mismatch on {graph_mod.serialize_graph6(g)}")
    return SuiteResult("k-connectivity vs brute force", len(graphs), fails)


def suite_hall(graphs: list[Graph], seed: int = 7) -> SuiteResult:
    rng = SplitMix64(seed)
    fails = []
    checked = 0
    for g in graphs:
        for u, v in g.edges():
            bad = [x for x in range(g.n) if x not in (u, v) and rng.below(4) == 0]
            for m in range(4, min(g.n, 9) + 1):
                for r in range(1, (m - 2) // 2 + 1):
                    spec = TreeSpec.double_star(r, m - 2 - r)
                    got = embed.embed_double_star(g, u, v, spec, bad) is not None
                    want = brute_double_star_exists(g, u, v, spec.r, spec.s, bad)
                    checked += 1
                    if got != want:
                        fails.append(f"Hall mismatch on {graph_mod.serialize_graph6(g)} edge {(u, v)} {spec}")
    return SuiteResult("double-star Hall condition vs brute force", checked, fails)


def suite_graph6(graphs: list[Graph]) -> SuiteResult:
    fails = []
    fixed = {
        "C~": complete_graph(4),
        "Bw": complete_graph(3),
        "Bg": path_graph(3),
        "@": Graph(1),
    }
    for text, g in fixed.items():
        if graph_mod.parse_graph6(text) != g:
            fails.append(f"decode {text!r} wrong")
        if graph_mod.serialize_graph6(g) != text:
            fails.append(f"encode to {text!r} wrong")
    for g in graphs:
        s = graph_mod.serialize_graph6(g)
        if graph_mod.parse_graph6(s) != g or graph_mod.serialize_graph6(graph_mod.parse_graph6(s)) != s:
            fails.append(f"round trip failed for {s}")
    return SuiteResult("graph6 fixed points and round trip", len(graphs) + len(fixed), fails)


def suite_finder_vs_oracle(count: int = 12) -> SuiteResult:
    from .finder import run_to_fixpoint
    from .oracle import oracle_contains, oracle_find

    fails = []
    specs = [TreeSpec.star(4), TreeSpec.double_star(1, 2)]
    for i in range(count):
        spec = specs[i % 2]
        d = spec.m + 2
        g = gen_hypothesis_graph(d + 1 + i % 4, d, 900 + i)
        state = run_to_fixpoint(g, spec)
        if not oracle_find(g, spec).exists or not oracle_contains(g, spec, state.tree):
            fails.append(f"finder/oracle disagreement on {graph_mod.serialize_graph6(g)}")
    return SuiteResult("finder witnesses vs oracle", count, fails)


def run_all(log: Callable[[str], None] = print) -> bool:
    corpus = named_graphs() + random_small_graphs(150, seed=11)
    gen = [gen_hypothesis_graph(n, d, s) for s, (n, d) in enumerate([(8, 6), (10, 7), (12, 6), (16, 8), (20, 9)] * 4)]
    results = [
        suite_graph6(corpus + gen),
        suite_blocks(corpus),
        suite_k_connectivity(corpus),
        suite_hall(random_small_graphs(40, seed=12, max_n=9)),
        suite_finder_vs_oracle(),
    ]
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        log(f"{status} {res.name}: {res.checked} checked, {len(res.failures)} failures")
        for f in res.failures[:5]:
            log(f"    {f}")
    return all(r.ok for r in results)
