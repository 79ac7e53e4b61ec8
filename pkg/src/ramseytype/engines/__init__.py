"""ramseytype Engines - Constructive Subroutines.

The combinatorial steps the extraction pipelines are built from. The
package is organized into modules by technique:

    matching     induced matchings from private neighbours
    coloring     monochromatic cliques in edge-colored K_N
    refinement   biclique / co-biclique refinement of several parts
    trichotomy   induced path, clique or star
    pruning      trivial-vertex deletion rules
"""

from .coloring import ColoredClique, find_mono_clique, pentagon_coloring
from .matching import (
    BipartiteView,
    extract_induced_matching,
    lemma_tight_instance,
    private_matching,
)
from .pruning import PruneResult, prune
from .refinement import RefinedParts, multipartite_refine
from .trichotomy import ShapeResult, path_clique_star

__all__ = [
    "BipartiteView",
    "ColoredClique",
    "PruneResult",
    "RefinedParts",
    "ShapeResult",
    "extract_induced_matching",
    "find_mono_clique",
    "lemma_tight_instance",
    "multipartite_refine",
    "path_clique_star",
    "pentagon_coloring",
    "private_matching",
    "prune",
]
