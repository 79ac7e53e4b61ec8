"""Pruning rules that strip trivial vertices one by one.

degree1 deletes a vertex of current degree <= 1 until none is left.
alpha1 deletes a vertex whose current neighbourhood is a clique, i.e.
alpha(N(v)) <= 1, recomputed after every deletion. Both always take the
smallest qualifying label, and the log keeps original labels.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Tuple

from ..errors import ErrorCode, make_error
from ..graph import Graph, bits, induced

logger = logging.getLogger(__name__)

RULES = ("degree1", "alpha1")


@dataclass
class PruneResult:
    """Surviving induced subgraph plus the deletion log.

    Attributes:
        graph: G minus the removed vertices, relabelled
        kept: kept[i] is the original label of graph vertex i
        removed: Original labels in deletion order
    """
    graph: Graph
    kept: Tuple[int, ...]
    removed: List[int] = field(default_factory=list)


def _trivial(G: Graph, rule: str, v: int, alive: int) -> bool:
    neighbourhood = G.rows[v] & alive
    if rule == "degree1":
        return neighbourhood.bit_count() <= 1
    return G.is_clique(neighbourhood)


def prune(G: Graph, rule: str) -> PruneResult:
    """Apply a pruning rule to its fixed point.

    Args:
        G: Graph to prune
        rule: 'degree1' or 'alpha1'

    Returns:
        PruneResult with the surviving graph and the deletion order
    """
    if rule not in RULES:
        raise make_error(ErrorCode.E004, what="prune rule", details=f"'{rule}' is not one of {RULES}")
    alive = G.full_mask
    removed: List[int] = []
    progress = True
    while progress:
        progress = False
        for v in bits(alive):
            if _trivial(G, rule, v, alive):
                alive &= ~(1 << v)
                removed.append(v)
                progress = True
                break
    graph, kept = induced(G, list(bits(alive)))
    logger.debug("prune %s: removed %d of %d vertices", rule, len(removed), G.order)
    return PruneResult(graph, kept, removed)
