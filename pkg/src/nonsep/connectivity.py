"""Cut vertices, blocks, k-connectivity and the block structure of G - V(T')."""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph


def _alive_mask(g: Graph, removed: Iterable[int]) -> list[bool]:
    alive = [True] * g.n
    for v in removed:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        alive[v] = False
    return alive


def _biconnected(g: Graph, alive: Sequence[bool]) -> tuple[list[list[int]], set[int]]:
    """Hopcroft-Tarjan low-link pass over the subgraph induced by ``alive``.

    Returns ``(blocks, cut_vertices)``; isolated vertices are singleton blocks.
    Iterative so that deep graphs don't hit the recursion limit.
    """
    n = g.n
    adj = g.adj
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    blocks: list[list[int]] = []
    cut: set[int] = set()
    timer = 0
    for root in range(n):
        if not alive[root] or disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        vstack = [root]
        stack = [(root, iter(adj[root]))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if not alive[w]:
                    continue
                if disc[w] == -1:
                    parent[w] = v
                    disc[w] = low[w] = timer
                    timer += 1
                    vstack.append(w)
                    stack.append((w, iter(adj[w])))
                    break
                if w != parent[v] and disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                stack.pop()
                p = parent[v]
                if p == -1:
                    continue
                if low[v] < low[p]:
                    low[p] = low[v]
                if low[v] >= disc[p]:
                    if p == root:
                        root_children += 1
                    else:
                        cut.add(p)
                    comp = [p]
                    while True:
                        x = vstack.pop()
                        comp.append(x)
                        if x == v:
                            break
                    blocks.append(comp)
        if root_children >= 2:
            cut.add(root)
        if root_children == 0:
            blocks.append([root])
    return blocks, cut


def cut_vertices(g: Graph) -> list[int]:
    return sorted(_biconnected(g, [True] * g.n)[1])


def blocks(g: Graph) -> list[tuple[int, ...]]:
    """All blocks as sorted vertex tuples, ordered by their sorted contents."""
    return sorted(tuple(sorted(b)) for b in _biconnected(g, [True] * g.n)[0])


def is_biconnected(g: Graph) -> bool:
    return is_biconnected_without(g, ())


def is_biconnected_without(g: Graph, removed: Iterable[int]) -> bool:
    """Whether ``g - removed`` is 2-connected, without building the subgraph."""
    alive = _alive_mask(g, removed)
    left = sum(alive)
    if left < 3:
        return False
    bl, _ = _biconnected(g, alive)
    return len(bl) == 1 and len(bl[0]) == left


def connected_components(g: Graph, alive: Sequence[bool]) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if not alive[s] or seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if alive[w] and not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g, [True] * g.n)) <= 1


# -- Menger ------------------------------------------------------------------


def local_vertex_connectivity(g: Graph, s: int, t: int, cap: int | None = None) -> int:
    """Maximum number of internally disjoint s-t paths, for non-adjacent s != t.

    Unit-capacity max-flow on the vertex-split digraph (v_in -> v_out), with
    BFS augmenting paths; stops early once ``cap`` paths are found.
    """
    if s == t or g.has_edge(s, t):
        raise ValueError("local connectivity needs distinct non-adjacent vertices")
    n = g.n
    res: list[dict[int, int]] = [{} for _ in range(2 * n)]
    for v in range(n):
        if v != s and v != t:
            res[2 * v][2 * v + 1] = 1
            res[2 * v + 1].setdefault(2 * v, 0)
    for a, b in g.edges():
        for x, y in ((a, b), (b, a)):
            res[2 * x + 1][2 * y] = 1
            res[2 * y].setdefault(2 * x + 1, 0)
    source, sink = 2 * s + 1, 2 * t
    limit = n if cap is None else cap
    flow = 0
    while flow < limit:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            x = queue.popleft()
            for y, c in res[x].items():
                if c > 0 and y not in prev:
                    prev[y] = x
                    queue.append(y)
        if sink not in prev:
            break
        y = sink
        while y != source:
            x = prev[y]
            res[x][y] -= 1
            res[y][x] += 1
            y = x
        flow += 1
    return flow


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff ``g.n > k`` and no set of fewer than ``k`` vertices disconnects ``g``.

    Fix a minimum-degree vertex ``v``. A separator of size < k either misses
    ``v`` (then it separates ``v`` from some non-neighbour) or contains it (then,
    being minimal, it separates two non-adjacent neighbours of ``v``).
    """
    if k < 1:
        raise ValueError("k must be positive")
    if g.n <= k:
        return False
    v = min(range(g.n), key=lambda x: (g.degree(x), x))
    if g.degree(v) < k:
        return False
    nb = g.nbrs[v]
    for w in range(g.n):
        if w != v and w not in nb and local_vertex_connectivity(g, v, w, k) < k:
            return False
    for i, x in enumerate(g.adj[v]):
        for y in g.adj[v][i + 1:]:
            if not g.has_edge(x, y) and local_vertex_connectivity(g, x, y, k) < k:
                return False
    return True


# -- block structure / potential ---------------------------------------------


@functools.total_ordering
@dataclass(frozen=True)
class Potential:
    """Lexicographic search measure: maximum block size, then component sizes."""

    block_size: int
    component_sizes: tuple[int, ...] = ()

    def __lt__(self, other: "Potential") -> bool:
        return compare_potential(self, other) < 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Potential):
            return NotImplemented
        return compare_potential(self, other) == 0

    def __hash__(self) -> int:
        sizes = self.component_sizes
        while sizes and sizes[-1] == 0:
            sizes = sizes[:-1]
        return hash((self.block_size, sizes))


def compare_potential(a: Potential, b: Potential) -> int:
    """-1, 0 or 1 as ``a`` is smaller, equal or larger; shorter size lists pad with 0."""
    if a.block_size != b.block_size:
        return -1 if a.block_size < b.block_size else 1
    sa, sb = a.component_sizes, b.component_sizes
    width = max(len(sa), len(sb))
    pa = tuple(sa) + (0,) * (width - len(sa))
    pb = tuple(sb) + (0,) * (width - len(sb))
    if pa == pb:
        return 0
    return -1 if pa < pb else 1


@dataclass(frozen=True)
class BlockStructure:
    """Decomposition of ``G' = G - removed`` into a maximum block and the rest.

    ``components`` are the components of ``G' - block`` sorted by size
    (descending), ties by smallest vertex. ``attachments[i]`` is the unique
    block vertex adjacent to ``components[i]``, or None if there is none.
    """

    removed: tuple[int, ...]
    block: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    attachments: tuple[int | None, ...]
    is_biconnected: bool

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.components)

    def potential(self) -> Potential:
        return potential_of(self)


def potential_of(bs: BlockStructure) -> Potential:
    return Potential(len(bs.block), tuple(len(h) for h in bs.components))


def block_structure(g: Graph, removed: Iterable[int]) -> BlockStructure:
    """Maximum block of ``g - removed`` and the components hanging off it.

    When several blocks share the maximum size, the one whose sorted
    component-size sequence is lexicographically largest is taken, then the
    one with the smallest vertex. That makes the potential independent of
    which maximum block one happens to look at.
    """
    removed = tuple(sorted(set(removed)))
    alive = _alive_mask(g, removed)
    left = g.n - len(removed)
    if left < 1:
        raise ValueError("nothing left after removal")
    bl, _ = _biconnected(g, alive)
    top = max(len(b) for b in bl)
    best = None
    for b in bl:
        if len(b) != top:
            continue
        bset = set(b)
        rest = [a and v not in bset for v, a in enumerate(alive)]
        comps = [tuple(sorted(c)) for c in connected_components(g, rest)]
        comps.sort(key=lambda c: (-len(c), c[0]))
        key = (tuple(len(c) for c in comps), -min(b))
        if best is None or key > best[0]:
            best = (key, tuple(sorted(b)), comps, bset)
    assert best is not None
    _, block, comps, bset = best
    attachments = []
    for c in comps:
        touch = {w for v in c for w in g.adj[v] if w in bset}
        assert len(touch) <= 1, "component attached to a block at two vertices"
        attachments.append(next(iter(touch)) if touch else None)
    return BlockStructure(
        removed=removed,
        block=block,
        components=tuple(comps),
        attachments=tuple(attachments),
        is_biconnected=not comps and len(block) >= 3,
    )
