"""Multipartite biclique / co-biclique refinement.

Given disjoint parts V_1..V_k of a host graph, choose q-subsets U_i c V_i
such that between every two chosen subsets the host has either all
edges (a biclique K_{q,q}) or none (its bipartite complement).
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from ..config.settings import SearchLimits
from ..errors import ErrorCode, budget_error, make_error
from ..graph import Graph, VertexSet

logger = logging.getLogger(__name__)

BICLIQUE = "biclique"
EMPTY = "empty"


@dataclass
class RefinedParts:
    """The chosen subsets and the pattern between each pair of them."""
    subsets: List[VertexSet]
    patterns: Dict[Tuple[int, int], str] = field(default_factory=dict)


def pattern_between(host: Graph, A: VertexSet, B: VertexSet) -> Optional[str]:
    """'biclique', 'empty', or None for a mixed pair."""
    full = all(host.rows[a] & B.mask == B.mask for a in A)
    if full:
        return BICLIQUE
    if all(host.rows[a] & B.mask == 0 for a in A):
        return EMPTY
    return None


class _RefineSearch:
    def __init__(self, host: Graph, parts: Sequence[VertexSet], q: int, budget: int):
        self.host = host
        self.parts = parts
        self.q = q
        self.budget = budget
        self.nodes = 0
        self.chosen: List[int] = []

    def run(self) -> Optional[List[int]]:
        if self._extend(0):
            return list(self.chosen)
        return None

    def _signature(self, v: int) -> Optional[Tuple[bool, ...]]:
        row = self.host.rows[v]
        signature = []
        for mask in self.chosen:
            hit = row & mask
            if hit == mask:
                signature.append(True)
            elif hit == 0:
                signature.append(False)
            else:
                return None
        return tuple(signature)

    def _extend(self, i: int) -> bool:
        if i == len(self.parts):
            return True
        self.nodes += 1
        if self.nodes > self.budget:
            raise budget_error("multipartite refinement", self.budget)
        groups: Dict[Tuple[bool, ...], List[int]] = {}
        for v in self.parts[i]:
            signature = self._signature(v)
            if signature is not None:
                groups.setdefault(signature, []).append(v)
        # vertices sharing a signature see every earlier U_j the same way
        for signature in sorted(groups, reverse=True):
            group = groups[signature]
            if len(group) < self.q:
                continue
            for combo in combinations(group, self.q):
                self.nodes += 1
                if self.nodes > self.budget:
                    raise budget_error("multipartite refinement", self.budget)
                self.chosen.append(sum(1 << v for v in combo))
                if self._extend(i + 1):
                    return True
                self.chosen.pop()
        return False


def multipartite_refine(host: Graph, parts: Sequence[VertexSet], q: int,
                        limits: Optional[SearchLimits] = None) -> Optional[RefinedParts]:
    """Pick homogeneous q-subsets, one per part.

    Args:
        host: Graph the parts live in
        parts: Pairwise disjoint vertex sets
        q: Size of every chosen subset

    Returns:
        Verified RefinedParts, or None after a complete search finds none

    Raises:
        SearchLimitError: E204 for a part with fewer than q vertices,
            E202 when the node budget runs out
    """
    lim = limits if limits is not None else SearchLimits()
    seen = 0
    for index, part in enumerate(parts):
        if part.mask & seen:
            raise make_error(
                ErrorCode.E004, what="multipartite refinement", details=f"part {index} overlaps"
            )
        seen |= part.mask
        if len(part) < q:
            raise make_error(ErrorCode.E204, index=index, size=len(part), target=q)

    search = _RefineSearch(host, parts, q, lim.node_budget)
    chosen = search.run()
    logger.debug("multipartite refinement: %d node(s)", search.nodes)
    if chosen is None:
        return None

    subsets = [VertexSet(mask) for mask in chosen]
    patterns: Dict[Tuple[int, int], str] = {}
    for i in range(len(subsets)):
        for j in range(i + 1, len(subsets)):
            pattern = pattern_between(host, subsets[i], subsets[j])
            if pattern is None:
                raise make_error(
                    ErrorCode.E004,
                    what="multipartite refinement",
                    details=f"parts {i} and {j} failed to verify",
                )
            patterns[(i, j)] = pattern
    return RefinedParts(subsets, patterns)
