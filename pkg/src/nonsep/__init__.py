"""Non-separating stars and double-stars in 2-connected graphs."""

from .connectivity import (
    BlockStructure,
    Potential,
    block_structure,
    blocks,
    compare_potential,
    cut_vertices,
    is_biconnected,
    is_k_connected,
    potential_of,
)
from .embed import DoubleStarTree, StarTree, TreeSpec, embed_double_star, embed_star, verify_tree
from .finder import (
    ClaimTag,
    HypothesisError,
    SearchError,
    UnsupportedShapeError,
    find_nonseparating_double_star,
    find_nonseparating_star,
    find_nonseparating_tree,
    run_to_fixpoint,
)
from .generate import gen_hypothesis_graph
from .graph import (
    Graph,
    GraphFormatError,
    complete_graph,
    cycle_graph,
    parse_edgelist,
    parse_graph6,
    path_graph,
    petersen_graph,
    remove_vertices,
    serialize_edgelist,
    serialize_graph6,
)
from .oracle import OracleReport, oracle_find

__version__ = "0.1.0"
