"""Induced path, clique or star.

A connected graph with many vertices contains a long induced path, a
large clique or a large induced star. path_clique_star certifies the
largest of each it can find and returns the best one.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..config.settings import SearchLimits
from ..errors import ErrorCode, budget_error, make_error
from ..graph import Graph, bits, component_count
from ..isomorphism import Embedding
from ..params import max_clique, max_stable_set

logger = logging.getLogger(__name__)

PATH = "path"
CLIQUE = "clique"
STAR = "star"

# ties between shapes of equal order resolve in this order
PREFERENCE = (CLIQUE, PATH, STAR)


@dataclass
class ShapeResult:
    """A certified shape: P_k (k vertices), K_k (k vertices) or K_{1,k} (k leaves).

    Embeddings follow the generator labellings: path order for P_k,
    center 0 and leaves 1..k for K_{1,k}.
    """
    shape: str
    order: int
    embedding: Embedding
    exact: bool = True
    candidates: Dict[str, Tuple[int, Embedding]] = field(default_factory=dict)

    @property
    def center(self) -> Optional[int]:
        return self.embedding.mapping[0] if self.shape == STAR else None


def best_star(G: Graph, limits: Optional[SearchLimits] = None) -> Tuple[int, Embedding]:
    """Largest induced star; ties go to the smallest center."""
    best_k = -1
    best: Tuple[int, ...] = ()
    for v in range(G.order):
        leaves = max_stable_set(G, G.rows[v], limits)
        if len(leaves) > best_k:
            best_k = len(leaves)
            best = (v, *leaves.to_list())
    return max(best_k, 0), Embedding(best)


def _bfs_far(G: Graph, start: int) -> Tuple[int, List[int]]:
    parent = {start: -1}
    queue = deque([start])
    last = start
    while queue:
        v = queue.popleft()
        last = v
        for u in bits(G.rows[v]):
            if u not in parent:
                parent[u] = v
                queue.append(u)
    path = []
    v = last
    while v != -1:
        path.append(v)
        v = parent[v]
    return last, path


def _shortest_path_bound(G: Graph) -> List[int]:
    # shortest paths are induced; double sweep picks a long one
    a, _ = _bfs_far(G, 0)
    _, path = _bfs_far(G, a)
    return path


class _PathSearch:
    def __init__(self, G: Graph, budget: int):
        self.G = G
        self.budget = budget
        self.nodes = 0
        self.best: List[int] = []

    def run(self) -> List[int]:
        for start in range(self.G.order):
            self._extend([start], 1 << start)
            if len(self.best) == self.G.order:
                break
        logger.debug("longest induced path: %d node(s)", self.nodes)
        return self.best

    def _extend(self, path: List[int], used: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise budget_error("longest induced path search", self.budget)
        if len(path) > len(self.best):
            self.best = list(path)
        last = path[-1]
        for w in bits(self.G.rows[last] & ~used):
            # w may see last and nothing else on the path
            if self.G.rows[w] & used != 1 << last:
                continue
            path.append(w)
            self._extend(path, used | (1 << w))
            path.pop()


def longest_induced_path(G: Graph, limits: Optional[SearchLimits] = None) -> Tuple[List[int], bool]:
    """Longest induced path, exact up to path_exact_cap vertices.

    Returns:
        (path vertices in order, exact flag)
    """
    lim = limits if limits is not None else SearchLimits()
    if G.order == 0:
        return [], True
    if G.order <= lim.path_exact_cap:
        return _PathSearch(G, lim.node_budget).run(), True
    return _shortest_path_bound(G), False


def path_clique_star(G: Graph, limits: Optional[SearchLimits] = None) -> ShapeResult:
    """Certify the largest induced path, clique and star of a connected graph.

    Raises:
        SearchLimitError: E203 for a disconnected graph
    """
    count = component_count(G)
    if count > 1:
        raise make_error(ErrorCode.E203, what="path/clique/star search", components=count)

    clique = max_clique(G, limits=limits)
    path, exact = longest_induced_path(G, limits)
    star_k, star = best_star(G, limits) if G.order else (0, Embedding(()))

    candidates = {
        CLIQUE: (len(clique), Embedding(tuple(clique.to_list()))),
        PATH: (len(path), Embedding(tuple(path))),
        STAR: (star_k, star),
    }
    shape = max(PREFERENCE, key=lambda s: (candidates[s][0], -PREFERENCE.index(s)))
    k, embedding = candidates[shape]
    logger.debug("trichotomy: clique %d, path %d, star %d -> %s",
                 len(clique), len(path), star_k, shape)
    return ShapeResult(shape, k, embedding, exact, candidates)
