"""Stars and double-stars placed at given centres while avoiding a forbidden set."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .graph import Graph

STAR = "star"
DOUBLE_STAR = "double-star"


@dataclass(frozen=True)
class TreeSpec:
    """Shape of the tree to find.

    A star of order ``m`` has ``m - 1`` leaves. A double-star is a centre edge
    with ``r`` leaves on one end and ``s`` on the other, ``1 <= r <= s`` and
    ``r + s = m - 2``.
    """

    kind: str
    m: int
    r: int = 0
    s: int = 0

    def __post_init__(self):
        if self.kind == STAR:
            if self.m < 3:
                raise ValueError(f"a star needs m >= 3, got m={self.m}")
        elif self.kind == DOUBLE_STAR:
            if self.m < 4:
                raise ValueError(f"a double-star needs m >= 4, got m={self.m}")
            if not 1 <= self.r <= self.s or self.r + self.s != self.m - 2:
                raise ValueError(
                    f"invalid double-star shape: need 1 <= r <= s and r + s = m - 2 "
                    f"(m={self.m}, r={self.r}, s={self.s})"
                )
        else:
            raise ValueError(f"unknown tree kind {self.kind!r}")

    @classmethod
    def star(cls, m: int) -> "TreeSpec":
        return cls(STAR, m)

    @classmethod
    def double_star(cls, r: int, s: int, m: int | None = None) -> "TreeSpec":
        """Build a double-star spec; ``r`` and ``s`` may be given in either order."""
        lo, hi = min(r, s), max(r, s)
        return cls(DOUBLE_STAR, lo + hi + 2 if m is None else m, lo, hi)

    def __str__(self) -> str:
        if self.kind == STAR:
            return f"star(m={self.m})"
        return f"double-star(m={self.m}, r={self.r}, s={self.s})"


@dataclass(frozen=True)
class StarTree:
    root: int
    leaves: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.root,) + self.leaves

    def edges(self) -> list[tuple[int, int]]:
        return [(self.root, x) for x in self.leaves]

    def to_json(self) -> dict:
        return {"kind": STAR, "root": self.root, "leaves": list(self.leaves)}


@dataclass(frozen=True)
class DoubleStarTree:
    u: int
    v: int
    u_leaves: tuple[int, ...]
    v_leaves: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.u, self.v) + self.u_leaves + self.v_leaves

    def edges(self) -> list[tuple[int, int]]:
        return [(self.u, self.v)] + [(self.u, x) for x in self.u_leaves] + [(self.v, x) for x in self.v_leaves]

    def to_json(self) -> dict:
        return {
            "kind": DOUBLE_STAR,
            "u": self.u,
            "v": self.v,
            "u_leaves": list(self.u_leaves),
            "v_leaves": list(self.v_leaves),
        }


Tree = Union[StarTree, DoubleStarTree]


def tree_from_json(obj: dict) -> Tree:
    if obj["kind"] == STAR:
        return StarTree(obj["root"], tuple(obj["leaves"]))
    if obj["kind"] == DOUBLE_STAR:
        return DoubleStarTree(obj["u"], obj["v"], tuple(obj["u_leaves"]), tuple(obj["v_leaves"]))
    raise ValueError(f"unknown tree kind {obj['kind']!r}")


def embed_star(g: Graph, root: int, m: int, forbidden: Iterable[int] = ()) -> StarTree | None:
    """Star of order ``m`` centred at ``root`` using its smallest free neighbours."""
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range for n={g.n}")
    bad = set(forbidden)
    if root in bad:
        raise ValueError(f"root {root} is forbidden")
    free = [x for x in g.adj[root] if x not in bad]
    if len(free) < m - 1:
        return None
    return StarTree(root, tuple(free[: m - 1]))


def hall_ok(g: Graph, u: int, v: int, r: int, s: int, forbidden: Iterable[int] = ()) -> bool:
    """Exact feasibility of ``r`` leaves at ``u`` and ``s`` at ``v``.

    With A and C the free neighbourhoods of u and v, distinct leaves exist iff
    |A| >= r, |C| >= s and |A | C| >= r + s (Hall's condition for two sets).
    """
    bad = set(forbidden) | {u, v}
    a = g.nbrs[u] - bad
    c = g.nbrs[v] - bad
    return len(a) >= r and len(c) >= s and len(a | c) >= r + s


def _place(g: Graph, u: int, v: int, r: int, s: int, bad: set[int]) -> DoubleStarTree | None:
    a = [x for x in g.adj[u] if x not in bad]
    c = [x for x in g.adj[v] if x not in bad]
    cset = set(c)
    if len(a) < r or len(c) < s or len(set(a) | cset) < r + s:
        return None
    # u takes private neighbours first so shared ones stay available to v
    u_leaves = ([x for x in a if x not in cset] + [x for x in a if x in cset])[:r]
    taken = set(u_leaves)
    v_leaves = [x for x in c if x not in taken][:s]
    return DoubleStarTree(u, v, tuple(sorted(u_leaves)), tuple(v_leaves))


def embed_double_star(
    g: Graph,
    u: int,
    v: int,
    spec: TreeSpec,
    forbidden: Iterable[int] = (),
    either: bool = False,
) -> DoubleStarTree | None:
    """Double-star with centre edge ``uv``, ``spec.r`` leaves at ``u`` and ``spec.s`` at ``v``.

    With ``either=True`` the swapped assignment (``s`` at ``u``) is tried too.
    Returns None when Hall's condition fails for every allowed orientation.
    """
    if spec.kind != DOUBLE_STAR:
        raise ValueError("embed_double_star needs a double-star spec")
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    bad = set(forbidden)
    if u in bad or v in bad:
        raise ValueError("centre vertex is forbidden")
    bad |= {u, v}
    t = _place(g, u, v, spec.r, spec.s, bad)
    if t is None and either and spec.r != spec.s:
        t = _place(g, u, v, spec.s, spec.r, bad)
    return t


def verify_tree(g: Graph, t: Tree, spec: TreeSpec) -> bool:
    """Certificate check: ``t`` is a subtree of ``g`` with the shape ``spec``."""
    verts = t.vertices
    if any(not (isinstance(x, int) and 0 <= x < g.n) for x in verts):
        return False
    if len(set(verts)) != len(verts) or len(verts) != spec.m:
        return False
    if isinstance(t, StarTree):
        if spec.kind != STAR:
            return False
    elif isinstance(t, DoubleStarTree):
        if spec.kind != DOUBLE_STAR:
            return False
        if sorted((len(t.u_leaves), len(t.v_leaves))) != [spec.r, spec.s]:
            return False
    else:
        return False
    return all(g.has_edge(a, b) for a, b in t.edges())
