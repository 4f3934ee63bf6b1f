"""Exhaustive ground truth: try every star / double-star of the requested shape."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .connectivity import is_biconnected, is_biconnected_without
from .embed import DOUBLE_STAR, STAR, DoubleStarTree, StarTree, Tree, TreeSpec
from .graph import Graph


@dataclass(frozen=True)
class OracleReport:
    hypotheses_ok: bool
    exists: bool
    witness: Tree | None
    n_candidates: int
    n_valid: int


def enumerate_stars(g: Graph, m: int) -> Iterator[StarTree]:
    """Every labelled star of order m: root ascending, leaf sets in combination order."""
    if m < 3:
        raise ValueError("a star needs m >= 3")
    for root in range(g.n):
        for leaves in combinations(g.adj[root], m - 1):
            yield StarTree(root, leaves)


def enumerate_double_stars(g: Graph, spec: TreeSpec) -> Iterator[DoubleStarTree]:
    """Every labelled double-star of shape (r, s), each exactly once.

    For each edge ``u < v`` emit ``r`` leaves at u / ``s`` at v and, when
    ``r != s``, also ``s`` at u / ``r`` at v. With ``r == s`` the swap would
    describe the same subtree, so it is skipped.
    """
    if spec.kind != DOUBLE_STAR:
        raise ValueError("enumerate_double_stars needs a double-star spec")
    shapes = [(spec.r, spec.s)] if spec.r == spec.s else [(spec.r, spec.s), (spec.s, spec.r)]
    for u, v in g.edges():
        nu = [x for x in g.adj[u] if x != v]
        nv = [x for x in g.adj[v] if x != u]
        for a, b in shapes:
            for ul in combinations(nu, a):
                used = set(ul)
                rest = [x for x in nv if x not in used]
                for vl in combinations(rest, b):
                    yield DoubleStarTree(u, v, ul, vl)


def enumerate_trees(g: Graph, spec: TreeSpec) -> Iterator[Tree]:
    if spec.kind == STAR:
        return enumerate_stars(g, spec.m)
    return enumerate_double_stars(g, spec)


def hypotheses_hold(g: Graph, spec: TreeSpec) -> bool:
    return g.n > 0 and g.min_degree() >= spec.m + 2 and is_biconnected(g)


def oracle_find(g: Graph, spec: TreeSpec, count_all: bool = False) -> OracleReport:
    """Test ``G - V(T')`` for 2-connectivity over the enumeration.

    Stops at the first valid tree unless ``count_all`` is set, in which case
    ``n_candidates``/``n_valid`` cover the whole enumeration.
    """
    n_cand = n_valid = 0
    witness = None
    for t in enumerate_trees(g, spec):
        n_cand += 1
        if is_biconnected_without(g, t.vertices):
            n_valid += 1
            if witness is None:
                witness = t
                if not count_all:
                    break
    return OracleReport(hypotheses_hold(g, spec), witness is not None, witness, n_cand, n_valid)


def canonical_key(t: Tree) -> tuple:
    """Labelled-subtree identity: vertex sets plus centre assignment."""
    if isinstance(t, StarTree):
        return (STAR, t.root, frozenset(t.leaves))
    ends = sorted([(t.u, frozenset(t.u_leaves)), (t.v, frozenset(t.v_leaves))])
    return (DOUBLE_STAR, tuple(ends))


def oracle_contains(g: Graph, spec: TreeSpec, tree: Tree) -> bool:
    """Whether ``tree`` occurs in the enumeration and is counted valid there."""
    key = canonical_key(tree)
    for t in enumerate_trees(g, spec):
        if canonical_key(t) == key:
            return is_biconnected_without(g, t.vertices)
    return False
