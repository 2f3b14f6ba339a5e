"""Graph-core: hosts, labelings, terminal sets, Steiner trees and families."""

from cisstkit.graph.generators import make_complete, make_complete_bipartite
from cisstkit.graph.trees import (
    TreeDefect,
    diagnose_steiner_tree,
    is_steiner_tree,
    path_interior,
    tree_path,
)
from cisstkit.graph.types import (
    BipartiteLabeling,
    Edge,
    Graph,
    SteinerTree,
    TerminalSet,
    TreeFamily,
    make_edge,
)

__all__ = [
    "BipartiteLabeling",
    "Edge",
    "Graph",
    "SteinerTree",
    "TerminalSet",
    "TreeDefect",
    "TreeFamily",
    "diagnose_steiner_tree",
    "is_steiner_tree",
    "make_complete",
    "make_complete_bipartite",
    "make_edge",
    "path_interior",
    "tree_path",
]
