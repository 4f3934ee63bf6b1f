"""Simple undirected graphs on vertices 0..n-1, plus graph6 and edge-list I/O."""

from __future__ import annotations

from typing import Iterable, Iterator

GRAPH6_HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    """Raised for malformed graph6 / edge-list input or unsupported sizes."""


class Graph:
    """Immutable simple graph with dense integer vertex ids.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``; ``nbrs[v]`` is the
    same set as a frozenset for O(1) membership tests.
    """

    __slots__ = ("n", "adj", "nbrs", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphFormatError(f"negative vertex count {n}")
        sets: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if v in sets[u]:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            sets[u].add(v)
            sets[v].add(u)
            m += 1
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in sets)
        self.nbrs: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in sets)
        self._m = m

    @property
    def m(self) -> int:
        return self._m

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbrs[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, a in enumerate(self.adj):
            for v in a:
                if v > u:
                    yield u, v

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)) if n >= 3 else ())


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


# -- graph6 -----------------------------------------------------------------


def _encode_size(n: int) -> str:
    if n < 0:
        raise GraphFormatError(f"negative vertex count {n}")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise GraphFormatError(f"n={n} too large for graph6")


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, offset of the first adjacency byte)``."""
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated 8-byte size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise GraphFormatError("truncated 4-byte size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (trailing newline allowed)."""
    line = text.rstrip("\r\n")
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise GraphFormatError("empty graph6 string")
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError as exc:
        raise GraphFormatError("non-ASCII character in graph6 string") from exc
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphFormatError(f"character {chr(b)!r} at position {i} outside graph6 range")
    n, off = _decode_size(data)
    nbits = n * (n - 1) // 2
    body = data[off:]
    expected = (nbits + 5) // 6
    if len(body) < expected:
        raise GraphFormatError(f"truncated: expected {expected} data bytes for n={n}, got {len(body)}")
    if len(body) > expected:
        raise GraphFormatError(f"trailing garbage: {len(body) - expected} extra bytes for n={n}")

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    # padding bits of the final byte must be zero
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise GraphFormatError("corrupt graph6: nonzero padding bits")
    return Graph(n, edges)


def serialize_graph6(g: Graph) -> str:
    """Encode ``g`` without relabelling (no trailing newline)."""
    out = [_encode_size(g.n)]
    acc = 0
    nacc = 0
    for j in range(1, g.n):
        nb = g.nbrs[j]
        for i in range(j):
            acc = (acc << 1) | (i in nb)
            nacc += 1
            if nacc == 6:
                out.append(chr(63 + acc))
                acc = nacc = 0
    if nacc:
        out.append(chr(63 + (acc << (6 - nacc))))
    return "".join(out)


# -- edge list --------------------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty edge list")
    try:
        header = [int(x) for x in lines[0]]
        pairs = [tuple(int(x) for x in ln) for ln in lines[1:]]
    except ValueError as exc:
        raise GraphFormatError(f"non-integer token: {exc}") from exc
    if len(header) != 2:
        raise GraphFormatError("header must be 'n m'")
    n, m = header
    if any(len(p) != 2 for p in pairs):
        raise GraphFormatError("each edge line must hold exactly two ids")
    if len(pairs) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(pairs)}")
    return Graph(n, pairs)


def serialize_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def remove_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``V(g) - removed`` with compacted ids.

    Returns the new graph and the old-id -> new-id map for surviving vertices.
    """
    gone = set(removed)
    for v in gone:
        if not 0 <= v < g.n:
            raise GraphFormatError(f"vertex {v} out of range for n={g.n}")
    mapping: dict[int, int] = {}
    for v in range(g.n):
        if v not in gone:
            mapping[v] = len(mapping)
    edges = [(mapping[u], mapping[v]) for u, v in g.edges() if u in mapping and v in mapping]
    return Graph(len(mapping), edges), mapping
