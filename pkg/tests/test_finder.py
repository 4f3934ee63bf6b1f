import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonsep.connectivity import block_structure, is_biconnected_without
from nonsep.embed import DoubleStarTree, StarTree, TreeSpec, verify_tree
from nonsep.finder import (
    ClaimTag,
    HypothesisError,
    UnsupportedShapeError,
    find_nonseparating_double_star,
    find_nonseparating_star,
    make_state,
    propose_dstar_moves,
    propose_star_moves,
    run_to_fixpoint,
)
from nonsep.generate import gen_hypothesis_graph
from nonsep.graph import Graph, complete_graph, cycle_graph
from nonsep.oracle import enumerate_trees, oracle_contains, oracle_find

from .conftest import necklace


def first_improving(g, state, propose):
    for cand in propose(g, state):
        bs = block_structure(g, cand.proposal.vertices)
        if bs.potential() > state.pot:
            return cand, bs.potential()
    return None, None


def test_k7_star_needs_no_moves():
    tree, trace = find_nonseparating_star(complete_graph(7), 4)
    assert trace == ()
    assert is_biconnected_without(complete_graph(7), tree.vertices)


def test_seeded_star_instance_cross_checked():
    g = gen_hypothesis_graph(12, 6, 7)
    tree, _ = find_nonseparating_star(g, 4)
    assert verify_tree(g, tree, TreeSpec.star(4))
    assert is_biconnected_without(g, tree.vertices)
    assert oracle_contains(g, TreeSpec.star(4), tree)


def test_hypothesis_violations():
    with pytest.raises(HypothesisError) as exc:
        find_nonseparating_star(cycle_graph(5), 4)
    assert exc.value.hypothesis == "min-degree"
    two_k7 = Graph(14, [(a + o, b + o) for o in (0, 7) for a in range(7) for b in range(a + 1, 7)])
    with pytest.raises(HypothesisError) as exc:
        find_nonseparating_star(two_k7, 4)
    assert exc.value.hypothesis == "2-connected"


def test_path_shapes_rejected():
    with pytest.raises(UnsupportedShapeError):
        find_nonseparating_star(complete_graph(7), 3)
    with pytest.raises(UnsupportedShapeError):
        find_nonseparating_double_star(complete_graph(7), TreeSpec.double_star(1, 1))


def test_k8_double_star():
    spec = TreeSpec.double_star(1, 2)
    tree, trace = find_nonseparating_double_star(complete_graph(8), spec)
    assert trace == () and verify_tree(complete_graph(8), tree, spec)
    assert len(set(range(8)) - set(tree.vertices)) == 3
    with pytest.raises(ValueError):
        TreeSpec("double-star", 5, 2, 2)


def test_seeded_double_star_cross_checked():
    g = gen_hypothesis_graph(14, 7, 3)
    spec = TreeSpec.double_star(1, 2)
    tree, _ = find_nonseparating_double_star(g, spec)
    assert oracle_contains(g, spec, tree)


def test_seeded_12_vertex_star_move():
    g = gen_hypothesis_graph(12, 6, 122)
    state = make_state(g, TreeSpec.star(4), StarTree(1, (0, 3, 5)))
    assert not state.terminal and state.bs.l == 1
    cand, pot = first_improving(g, state, propose_star_moves)
    assert cand.claim_tag is ClaimTag.C3
    assert pot > state.pot and pot.block_size == 8
    final = run_to_fixpoint(g, TreeSpec.star(4), initial=state.tree)
    assert final.terminal and final.iteration == 1


def test_star_l2_state_proposes_c2_first():
    g = necklace(3, 7)
    state = make_state(g, TreeSpec.star(4), StarTree(0, (1, 2, 3)))
    assert state.bs.l >= 2
    cands = list(propose_star_moves(g, state))
    first = cands[0]
    assert first.claim_tag is ClaimTag.C2
    t = first.witness["t"]
    assert not set(first.proposal.vertices) & (set(state.bs.block) | {t})
    cand, pot = first_improving(g, state, propose_star_moves)
    assert cand.claim_tag is ClaimTag.C2 and pot > state.pot


def test_star_endgame_state():
    g = necklace(2, 7)
    state = make_state(g, TreeSpec.star(4), StarTree(0, (2, 3, 4)))
    cand, pot = first_improving(g, state, propose_star_moves)
    assert cand.claim_tag is ClaimTag.ENDGAME
    path = cand.witness["path"]
    assert path[0] == cand.witness["z"] and path[-1] == cand.witness["w"]
    assert len(path) >= 3
    keep = set(state.bs.block) | set(path)
    assert not set(cand.proposal.vertices) & keep
    assert pot > state.pot


def test_dstar_l2_state_proposes_c3():
    g = necklace(3, 8)
    spec = TreeSpec.double_star(1, 2)
    state = make_state(g, spec, DoubleStarTree(0, 1, (2,), (3, 4)))
    assert state.bs.l >= 2
    cand, pot = first_improving(g, state, propose_dstar_moves)
    assert cand.claim_tag is ClaimTag.C3 and pot > state.pot
    assert not set(cand.proposal.vertices) & cand.protected


def test_dstar_endgame_state():
    g = necklace(2, 8)
    spec = TreeSpec.double_star(1, 2)
    state = make_state(g, spec, DoubleStarTree(0, 2, (3,), (4, 5)))
    cand, pot = first_improving(g, state, propose_dstar_moves)
    assert cand.claim_tag is ClaimTag.ENDGAME and pot > state.pot
    assert cand.protected >= set(state.bs.block) | set(cand.witness["path"])


def complete_component_configuration():
    """H_1 = {5, 6} is a clique joined to every tree vertex and to z = 9 in B.

    Tree: centre edge 0-1, leaf 2 at 0, leaves 3, 4 at 1. The tree 3-path 3-1-4
    has end B-neighbours 7 and 8; B is the K4 on {7, 8, 9, 10}.
    """
    edges = [(0, 1), (0, 2), (1, 3), (1, 4), (5, 6), (5, 9), (6, 9), (3, 7), (4, 8)]
    edges += [(t, h) for t in range(5) for h in (5, 6)]
    edges += [(a, b) for a in range(7, 11) for b in range(a + 1, 11)]
    return Graph(11, edges), DoubleStarTree(0, 1, (2,), (3, 4))


def test_complete_component_move():
    g, tree = complete_component_configuration()
    spec = TreeSpec.double_star(1, 2)
    state = make_state(g, spec, tree)
    assert state.bs.block == (7, 8, 9, 10)
    assert state.bs.components == ((5, 6),) and state.bs.attachments == (9,)
    cands = list(propose_dstar_moves(g, state))
    first = cands[0]
    assert first.claim_tag is ClaimTag.C6ii
    w = first.witness
    centre = {first.proposal.u, first.proposal.v}
    assert centre == {w["t4"], w["h4"]}
    assert w["t4"] in {0, 2} and w["h4"] in {5, 6}
    assert not set(first.proposal.vertices) & ({7, 8, 9, 10} | {w["t1"], w["h1"]})
    bs = block_structure(g, first.proposal.vertices)
    assert bs.potential() > state.pot


def test_terminal_state_rejected():
    state = make_state(complete_graph(7), TreeSpec.star(4), StarTree(0, (1, 2, 3)))
    with pytest.raises(ValueError):
        list(propose_star_moves(complete_graph(7), state))
    state = make_state(complete_graph(8), TreeSpec.double_star(1, 2), DoubleStarTree(0, 1, (2,), (3, 4)))
    with pytest.raises(ValueError):
        list(propose_dstar_moves(complete_graph(8), state))


SPECS = [
    TreeSpec.star(4),
    TreeSpec.star(5),
    TreeSpec.double_star(1, 2),
    TreeSpec.double_star(1, 3),
    TreeSpec.double_star(2, 2),
]


def _every_start(g, spec):
    tags = set()
    for start in enumerate_trees(g, spec):
        state = run_to_fixpoint(g, spec, initial=start)
        assert state.terminal and state.iteration <= g.n ** 2
        assert is_biconnected_without(g, state.tree.vertices)
        pots = [make_state(g, spec, start).pot] + [s.potential for s in state.trace]
        assert all(a < b for a, b in zip(pots, pots[1:]))
        tags.update(s.claim_tag for s in state.trace)
    return tags


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_progress_from_every_start_on_necklaces(spec):
    tags = set()
    # three-clique rings have too many labelled starts once m = 6
    for k in (2, 3) if spec.m <= 5 else (2,):
        tags |= _every_start(necklace(k, spec.m + 3), spec)
    assert ClaimTag.ENDGAME in tags


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_progress_from_every_start_on_generated(spec):
    d = spec.m + 2
    for seed in range(2):
        _every_start(gen_hypothesis_graph(d + 2 + seed, d, seed), spec)


def test_best_strategy_and_determinism():
    g = necklace(3, 8)
    spec = TreeSpec.double_star(1, 2)
    start = DoubleStarTree(0, 1, (2,), (3, 4))
    a = run_to_fixpoint(g, spec, initial=start)
    b = run_to_fixpoint(g, spec, initial=start)
    assert a == b
    best = run_to_fixpoint(g, spec, initial=start, strategy="best")
    assert best.terminal
    assert best.trace[0].potential >= a.trace[0].potential


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 4), st.integers(0, 8), st.integers(0, 2**32))
def test_finder_result_valid_and_in_oracle(which, extra, seed):
    spec = SPECS[which]
    d = spec.m + 2
    g = gen_hypothesis_graph(d + 1 + extra, d, seed)
    state = run_to_fixpoint(g, spec)
    assert verify_tree(g, state.tree, spec)
    assert oracle_contains(g, spec, state.tree)
    assert oracle_find(g, spec).exists
