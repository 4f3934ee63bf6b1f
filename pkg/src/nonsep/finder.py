"""Local search for a star or double-star whose removal keeps G 2-connected.

The current tree T' is scored by the potential of ``G - V(T')`` (size of a
maximum block B, then the sorted sizes of the components H_1, H_2, ... of
``G - V(T') - B``). While ``G - V(T')`` is not 2-connected, move generators
propose replacement trees T''. Each generator looks for one specific local
obstruction (an extra component, a tree vertex with two B-neighbours, ...)
and builds a T'' that leaves B plus a short ear intact. A proposal is only
accepted after recomputing its potential and seeing a strict increase, so a
faulty generator can stall the search but never produce a wrong answer.
"""

from __future__ import annotations

import enum
import json
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .connectivity import BlockStructure, Potential, block_structure, is_biconnected, is_biconnected_without
from .embed import (
    DOUBLE_STAR,
    STAR,
    DoubleStarTree,
    StarTree,
    Tree,
    TreeSpec,
    embed_double_star,
    embed_star,
    verify_tree,
)
from .graph import Graph, serialize_graph6


class ClaimTag(str, enum.Enum):
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    C5 = "C5"
    C5a = "C5a"
    C5b = "C5b"
    C6i = "C6i"
    C6ii = "C6ii"
    C7a = "C7a"
    C7b = "C7b"
    C7c = "C7c"
    ENDGAME = "ENDGAME"


class HypothesisError(ValueError):
    """Input graph does not satisfy 2-connectivity and minimum degree >= m + 2."""

    def __init__(self, hypothesis: str, message: str):
        super().__init__(message)
        self.hypothesis = hypothesis


class UnsupportedShapeError(ValueError):
    """Tree shape is a path (star m <= 3, double-star m = 4); use the oracle."""


class SearchError(RuntimeError):
    """The search got stuck or ran past its iteration cap.

    Under the hypotheses this never happens, so it means either a bug or a
    counterexample. ``dump`` holds a JSON-serialisable description of the state.
    """

    def __init__(self, message: str, dump: dict):
        super().__init__(f"{message}\nstate: {json.dumps(dump, sort_keys=True)}")
        self.dump = dump


class StuckError(SearchError):
    pass


class NonTerminationError(SearchError):
    pass


@dataclass(frozen=True)
class MoveCandidate:
    proposal: Tree
    claim_tag: ClaimTag
    protected: frozenset[int]
    witness: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class TraceStep:
    iteration: int
    claim_tag: ClaimTag
    potential: Potential


@dataclass(frozen=True)
class SearchState:
    spec: TreeSpec
    tree: Tree
    bs: BlockStructure
    pot: Potential
    iteration: int = 0
    trace: tuple[TraceStep, ...] = ()

    @property
    def terminal(self) -> bool:
        return self.bs.is_biconnected


def make_state(g: Graph, spec: TreeSpec, tree: Tree, iteration: int = 0, trace=()) -> SearchState:
    bs = block_structure(g, tree.vertices)
    return SearchState(spec, tree, bs, bs.potential(), iteration, tuple(trace))


def _dump(g: Graph, state: SearchState) -> dict:
    return {
        "graph6": serialize_graph6(g),
        "spec": str(state.spec),
        "tree": state.tree.to_json(),
        "block": list(state.bs.block),
        "components": [list(h) for h in state.bs.components],
        "attachments": list(state.bs.attachments),
        "iteration": state.iteration,
        "trace": [(s.claim_tag.value, s.potential.block_size, list(s.potential.component_sizes)) for s in state.trace],
    }


# -- shared helpers ------------------------------------------------------------


def _edges_within(g: Graph, verts) -> list[tuple[int, int]]:
    vs = set(verts)
    return [(x, y) for x in sorted(vs) for y in g.adj[x] if y > x and y in vs]


def _shortest_ear(g: Graph, block: frozenset[int], z: int, w: int) -> list[int] | None:
    """Shortest z -> w path whose interior avoids ``block`` (and has >= 1 vertex)."""
    prev: dict[int, int] = {}
    queue: deque[int] = deque()
    for x in g.adj[z]:
        if x not in block:
            prev[x] = z
            queue.append(x)
    while queue:
        x = queue.popleft()
        if w in g.nbrs[x]:
            path = [w, x]
            while path[-1] != z:
                path.append(prev[path[-1]])
            return path[::-1]
        for y in g.adj[x]:
            if y not in block and y not in prev:
                prev[y] = x
                queue.append(y)
    return None


def _endgame_path(g: Graph, state: SearchState, block: frozenset[int]) -> tuple[int, int, list[int]] | None:
    """``(z, w, P)`` when exactly one tree vertex class touches B, else None."""
    bs = state.bs
    if bs.l != 1 or bs.attachments[0] is None:
        return None
    touch = set().union(*(g.nbrs[t] & block for t in state.tree.vertices))
    if len(touch) != 1:
        return None
    (w,) = touch
    z = bs.attachments[0]
    assert z != w, f"endgame: z == w == {z} would be a cut vertex of G"
    path = _shortest_ear(g, block, z, w)
    assert path is not None, "endgame: no z-w path through H_1 and T'"
    assert len(path) >= 3, "endgame: path must have an interior vertex"
    return z, w, path


def _check_window(g: Graph, path: list[int], x: int) -> None:
    pos = [i for i, p in enumerate(path) if p in g.nbrs[x]]
    assert len(pos) <= 3 and (not pos or pos[-1] - pos[0] <= 2), (
        f"endgame: vertex {x} sees path positions {pos}; the path was not shortest"
    )


# -- stars ---------------------------------------------------------------------


def propose_star_moves(g: Graph, state: SearchState) -> Iterator[MoveCandidate]:
    """Candidate replacement stars, lazily, in the order of the case analysis.

    C2   several components: re-root inside the last one, keeping B and t free
         (t a tree vertex seeing H_1), so H_1 + t becomes a bigger component.
    C3   tree vertex t with two B-neighbours: B + t is 2-connected once the
         new star (rooted in H_1) avoids it.
    C4   tree edge t1t2 with distinct B-neighbours: same with B + {t1, t2}.
    C5   two leaves with distinct B-neighbours w, w': re-root at a third leaf
         (a) or at the old root (b) so that an ear through the leaves survives.
    ENDGAME  B meets the tree in w only and H_1 in z only: keep B plus the
         shortest z-w path P and root the new star outside B + P.
    """
    if state.bs.is_biconnected:
        raise ValueError("state is already terminal")
    tree = state.tree
    if not isinstance(tree, StarTree):
        raise TypeError("propose_star_moves needs a StarTree state")
    m = state.spec.m
    nb = g.nbrs
    block = frozenset(state.bs.block)
    comps = [frozenset(h) for h in state.bs.components]
    h1 = sorted(comps[0])
    root, leaves = tree.root, tree.leaves
    tverts = sorted(tree.vertices)
    bnb = {t: nb[t] & block for t in tverts}

    def star(center: int, protected: set[int], tag: ClaimTag, **witness) -> Iterator[MoveCandidate]:
        prot = frozenset(protected)
        t = embed_star(g, center, m, prot)
        if t is not None:
            yield MoveCandidate(t, tag, prot, witness)

    if len(comps) >= 2:
        last = sorted(comps[-1])
        for t in tverts:
            hs = sorted(nb[t] & comps[0])
            if hs:
                for x in last:
                    yield from star(x, block | {t}, ClaimTag.C2, t=t, h=hs[0], x=x)

    for t in tverts:
        if len(bnb[t]) >= 2:
            for x in h1:
                yield from star(x, block | {t}, ClaimTag.C3, t=t, x=x)

    for t1, t2 in tree.edges():
        pair = next(((b1, b2) for b1 in sorted(bnb[t1]) for b2 in sorted(bnb[t2]) if b1 != b2), None)
        if pair:
            for x in h1:
                yield from star(x, block | {t1, t2}, ClaimTag.C4, t1=t1, t2=t2, b1=pair[0], b2=pair[1], x=x)

    touching = set().union(*bnb.values())
    if len(touching) >= 2 and not bnb[root]:
        for v1, v2 in combinations(sorted(leaves), 2):
            pair = next(((a, b) for a in sorted(bnb[v1]) for b in sorted(bnb[v2]) if a != b), None)
            if pair is None:
                continue
            w, w2 = pair
            for v3 in sorted(leaves):
                if v3 in (v1, v2):
                    continue
                if not bnb[v3] or len(nb[v3] & {v1, v2}) <= 1:
                    yield from star(v3, block | {root, v1, v2}, ClaimTag.C5a, u=root, v1=v1, v2=v2, v3=v3, w=w, w2=w2)
                    continue
                for y in sorted(bnb[v3]):
                    for a, wa in ((v1, w), (v2, w2)):
                        if y != wa:
                            yield from star(root, block | {a, v3}, ClaimTag.C5b, u=root, leaf=a, v3=v3, y=y, w=wa)

    end = _endgame_path(g, state, block)
    if end is not None:
        z, w, path = end
        keep = block | set(path)
        for x in range(g.n):
            if x in keep:
                continue
            _check_window(g, path, x)
            if len(nb[x] - keep) >= m - 1:
                yield from star(x, keep, ClaimTag.ENDGAME, z=z, w=w, path=path, x=x)


# -- double-stars --------------------------------------------------------------


def _tree_nbrs(t: DoubleStarTree) -> dict[int, list[int]]:
    out = {t.u: sorted(t.u_leaves + (t.v,)), t.v: sorted(t.v_leaves + (t.u,))}
    for x in t.u_leaves:
        out[x] = [t.u]
    for x in t.v_leaves:
        out[x] = [t.v]
    return out


def propose_dstar_moves(g: Graph, state: SearchState) -> Iterator[MoveCandidate]:
    """Candidate replacement double-stars, lazily, in case-analysis order.

    Every proposal is a double-star centred on an edge chosen so that its
    leaves can avoid B plus a few tree vertices that would close an ear on B
    (or, for C3, glue a tree vertex to H_1).

    C3   several components: centre edge inside the last component.
    C4   tree vertex with two B-neighbours: centre edge inside H_1.
    C5   tree edge whose ends see distinct B-vertices: centre edge in H_1.
    C6   tree 3-path whose ends see distinct B-vertices: (i) centre edge in
         H_1 avoiding the path; (ii) if no edge of H_1 admits that, H_1 is a
         clique joined to everything it touches, so centre on a tree-H_1 edge
         t4h4 and keep B + {t1, h1} as the ear.
    C7   one leaf on each side sees B (w and w'): (a) another leaf also sees
         B, (b)/(c) otherwise, using a second leaf v2 on the larger side.
    ENDGAME  as for stars, centred on any edge outside B + P.
    """
    if state.bs.is_biconnected:
        raise ValueError("state is already terminal")
    tree = state.tree
    if not isinstance(tree, DoubleStarTree):
        raise TypeError("propose_dstar_moves needs a DoubleStarTree state")
    spec = state.spec
    nb = g.nbrs
    block = frozenset(state.bs.block)
    comps = [frozenset(h) for h in state.bs.components]
    assert all(len(h) >= 2 for h in comps), "double-star state with a singleton component"
    h1 = comps[0]
    h1_edges = _edges_within(g, h1)
    tverts = sorted(tree.vertices)
    tnb = _tree_nbrs(tree)
    bnb = {t: nb[t] & block for t in tverts}
    z = state.bs.attachments[0]

    def dstar(cu: int, cv: int, protected: set[int], tag: ClaimTag, **witness) -> Iterator[MoveCandidate]:
        prot = frozenset(protected)
        if cu in prot or cv in prot:
            return
        t = embed_double_star(g, cu, cv, spec, prot, either=True)
        if t is not None:
            yield MoveCandidate(t, tag, prot, witness)

    if len(comps) >= 2:
        last_edges = _edges_within(g, comps[-1])
        for t in tverts:
            if nb[t] & h1:
                for x, y in last_edges:
                    yield from dstar(x, y, block | {t}, ClaimTag.C3, t=t, x=x, y=y)

    for t in tverts:
        if len(bnb[t]) >= 2:
            for x, y in h1_edges:
                yield from dstar(x, y, block | {t}, ClaimTag.C4, t=t, x=x, y=y)

    for t1, t2 in tree.edges():
        pair = next(((b1, b2) for b1 in sorted(bnb[t1]) for b2 in sorted(bnb[t2]) if b1 != b2), None)
        if pair:
            for x, y in h1_edges:
                yield from dstar(x, y, block | {t1, t2}, ClaimTag.C5, t1=t1, t2=t2, b1=pair[0], b2=pair[1], x=x, y=y)

    for t2 in (tree.u, tree.v):
        for t1, t3 in combinations(tnb[t2], 2):
            ends = [(b1, b3) for b1 in sorted(bnb[t1]) for b3 in sorted(bnb[t3]) if b1 != b3]
            if not ends:
                continue
            path = {t1, t2, t3}
            embedded = False
            for x, y in h1_edges:
                for cand in dstar(x, y, block | path, ClaimTag.C6i, t1=t1, t2=t2, t3=t3, x=x, y=y):
                    embedded = True
                    yield cand
            if embedded or z is None:
                continue
            for b1, b3 in ends:
                for ta, ba in ((t1, b1), (t3, b3)):
                    if ba == z:
                        continue
                    for t4 in tverts:
                        if t4 in path:
                            continue
                        for h4 in sorted(nb[t4] & h1):
                            for hh in sorted(h1 - {h4}):
                                if ta in nb[hh] and z in nb[hh]:
                                    yield from dstar(
                                        t4, h4, block | {ta, hh}, ClaimTag.C6ii,
                                        t1=ta, b1=ba, z=z, t4=t4, h4=h4, h1=hh,
                                    )

    touching = set().union(*bnb.values())
    if len(touching) >= 2:
        sides = ((tree.u, tree.v, tree.u_leaves, tree.v_leaves), (tree.v, tree.u, tree.v_leaves, tree.u_leaves))
        for cu, cv, ul, vl in sides:
            if bnb[cu] or bnb[cv]:
                continue
            for u1 in sorted(ul):
                for v1 in sorted(vl):
                    pair = next(((a, b) for a in sorted(bnb[u1]) for b in sorted(bnb[v1]) if a != b), None)
                    if pair is None:
                        continue
                    w, w2 = pair
                    wit = dict(u=cu, v=cv, u1=u1, v1=v1, w=w, w2=w2)
                    others = [x for x in sorted(vl) if x != v1]
                    for vj in others:
                        if not bnb[vj]:
                            continue
                        if cu in nb[vj] or u1 in nb[vj]:
                            prot = {cu, u1, vj} if cu in nb[vj] else {u1, vj}
                            for vp in sorted(nb[cv] & h1):
                                yield from dstar(cv, vp, block | prot, ClaimTag.C7a, vj=vj, vp=vp, **wit)
                        else:
                            for vp in sorted(nb[vj] & h1):
                                yield from dstar(vj, vp, block | {cu, cv, u1, v1}, ClaimTag.C7a, vj=vj, vp=vp, **wit)
                    for v2 in others:
                        if bnb[v2]:
                            continue
                        for vp in sorted(nb[v2] & h1):
                            yield from dstar(v2, vp, block | {cu, cv, u1, v1}, ClaimTag.C7b, v2=v2, vp=vp, **wit)
                        yield from dstar(cu, cv, block | {u1, v1, v2}, ClaimTag.C7c, v2=v2, **wit)

    end = _endgame_path(g, state, block)
    if end is not None:
        z, w, path = end
        keep = block | set(path)
        for x in range(g.n):
            if x not in keep:
                _check_window(g, path, x)
        rest = [x for x in range(g.n) if x not in keep]
        for x, y in _edges_within(g, rest):
            yield from dstar(x, y, keep, ClaimTag.ENDGAME, z=z, w=w, path=path, x=x, y=y)


# -- driver --------------------------------------------------------------------


def check_hypotheses(g: Graph, spec: TreeSpec) -> None:
    if not is_biconnected(g):
        raise HypothesisError("2-connected", "input graph is not 2-connected")
    need = spec.m + 2
    if g.min_degree() < need:
        raise HypothesisError(
            "min-degree", f"minimum degree {g.min_degree()} < m + 2 = {need}"
        )


def check_shape(spec: TreeSpec) -> None:
    if spec.kind == STAR and spec.m <= 3:
        raise UnsupportedShapeError(f"a star with m={spec.m} is a path; use the oracle (--method oracle)")
    if spec.kind == DOUBLE_STAR and spec.m <= 4:
        raise UnsupportedShapeError(f"a double-star with m={spec.m} is a path; use the oracle (--method oracle)")


def initial_tree(g: Graph, spec: TreeSpec) -> Tree:
    """Star at a maximum-degree vertex, or double-star on a maximum degree-sum edge."""
    if spec.kind == STAR:
        root = min(range(g.n), key=lambda v: (-g.degree(v), v))
        tree = embed_star(g, root, spec.m)
    else:
        u, v = min(g.edges(), key=lambda e: (-(g.degree(e[0]) + g.degree(e[1])), e))
        tree = embed_double_star(g, u, v, spec, either=True)
    if tree is None:
        raise HypothesisError("min-degree", f"no {spec} fits at the highest-degree position")
    return tree


def _assert_forced_facts(g: Graph, state: SearchState) -> None:
    bs = state.bs
    assert len(bs.block) >= 3, f"maximum block of G - T' has only {len(bs.block)} vertices"
    tv = set(state.tree.vertices)
    for h in bs.components:
        assert any(g.nbrs[x] & tv for x in h), "component of G - T' - B not attached to T'"
        if state.spec.kind == DOUBLE_STAR:
            assert len(h) >= 2, "singleton component in a double-star state"


def run_to_fixpoint(
    g: Graph,
    spec: TreeSpec,
    *,
    initial: Tree | None = None,
    strategy: str = "first",
) -> SearchState:
    """Improve the tree until ``G - V(T')`` is 2-connected.

    ``strategy="first"`` accepts the first strictly improving candidate;
    ``"best"`` scans all candidates and takes the one with highest potential.
    Raises HypothesisError before searching, StuckError if no candidate
    improves, NonTerminationError past ``n**2`` iterations.
    """
    if strategy not in ("first", "best"):
        raise ValueError(f"unknown strategy {strategy!r}")
    check_shape(spec)
    check_hypotheses(g, spec)
    tree = initial_tree(g, spec) if initial is None else initial
    if not verify_tree(g, tree, spec):
        raise ValueError(f"initial tree {tree} is not a {spec} in the graph")
    propose = propose_star_moves if spec.kind == STAR else propose_dstar_moves
    state = make_state(g, spec, tree)
    cap = g.n * g.n
    while not state.terminal:
        _assert_forced_facts(g, state)
        if state.iteration >= cap:
            raise NonTerminationError(f"iteration cap {cap} exceeded", _dump(g, state))
        chosen = None
        for cand in propose(g, state):
            assert verify_tree(g, cand.proposal, spec), f"generator {cand.claim_tag} built an invalid tree"
            assert not set(cand.proposal.vertices) & cand.protected
            bs = block_structure(g, cand.proposal.vertices)
            pot = bs.potential()
            if pot > state.pot and (chosen is None or pot > chosen[2]):
                chosen = (cand, bs, pot)
                if strategy == "first":
                    break
        if chosen is None:
            raise StuckError("no strictly improving candidate", _dump(g, state))
        cand, bs, pot = chosen
        step = TraceStep(state.iteration + 1, cand.claim_tag, pot)
        state = SearchState(spec, cand.proposal, bs, pot, state.iteration + 1, state.trace + (step,))
    if not (verify_tree(g, state.tree, spec) and is_biconnected_without(g, state.tree.vertices)):
        raise SearchError("terminal state failed re-verification", _dump(g, state))
    return state


def find_nonseparating_star(g: Graph, m: int, **kw) -> tuple[StarTree, tuple[TraceStep, ...]]:
    state = run_to_fixpoint(g, TreeSpec.star(m), **kw)
    return state.tree, state.trace


def find_nonseparating_double_star(g: Graph, spec: TreeSpec, **kw) -> tuple[DoubleStarTree, tuple[TraceStep, ...]]:
    if spec.kind != DOUBLE_STAR:
        raise ValueError("find_nonseparating_double_star needs a double-star spec")
    state = run_to_fixpoint(g, spec, **kw)
    return state.tree, state.trace


def find_nonseparating_tree(g: Graph, spec: TreeSpec, **kw) -> tuple[Tree, tuple[TraceStep, ...]]:
    state = run_to_fixpoint(g, spec, **kw)
    return state.tree, state.trace
