"""Induced matchings from minimal dominating sets.

If every x in X has a neighbour in Y, every y in Y has at most n
neighbours in X and |X| >= n(p-1)+1, then a minimal Y' c Y dominating X
has at least p members, and each member has a private neighbour in X.
Those (private neighbour, member) pairs form an induced matching of the
bipartite view.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from ..errors import ErrorCode, make_error
from ..graph import Graph, VertexSet, bits, build_graph

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class BipartiteView:
    """The edges of host between X and Y, and nothing else."""
    host: Graph
    X: VertexSet
    Y: VertexSet

    def __post_init__(self) -> None:
        if self.X.mask & self.Y.mask:
            raise make_error(
                ErrorCode.E004,
                what="bipartite view",
                details=f"X and Y share {(self.X & self.Y).to_list()}",
            )
        if (self.X.mask | self.Y.mask) >> self.host.order:
            raise make_error(
                ErrorCode.E004, what="bipartite view", details="X or Y leaves the host graph"
            )

    def x_neighbors(self, x: int) -> int:
        return self.host.rows[x] & self.Y.mask

    def y_neighbors(self, y: int) -> int:
        return self.host.rows[y] & self.X.mask


def check_hypotheses(view: BipartiteView, n: int, p: int) -> None:
    """Raise E301 naming the first failing hypothesis."""
    for x in view.X:
        if not view.x_neighbors(x):
            raise make_error(ErrorCode.E301, hypothesis="delta(X) >= 1", where=f"x = {x}")
    for y in view.Y:
        if view.y_neighbors(y).bit_count() > n:
            raise make_error(ErrorCode.E301, hypothesis="Delta(Y) <= n", where=f"y = {y}")
    if len(view.X) < n * (p - 1) + 1:
        raise make_error(
            ErrorCode.E301, hypothesis="|X| >= n(p-1)+1", where=f"|X| = {len(view.X)}"
        )


def minimal_dominating(view: BipartiteView) -> List[int]:
    """Minimal Y' c Y dominating X, by one ascending removal pass."""
    coverage = {y: view.y_neighbors(y) for y in view.Y}
    kept = [y for y in view.Y if coverage[y]]
    for y in list(kept):
        others = 0
        for z in kept:
            if z != y:
                others |= coverage[z]
        if others & view.X.mask == view.X.mask:
            kept.remove(y)
    return kept


def private_matching(view: BipartiteView) -> List[Pair]:
    """All (private neighbour, dominator) pairs of a minimal Y'.

    Each dominator contributes its smallest private neighbour; pairs
    come out in ascending dominator order.
    """
    for x in view.X:
        if not view.x_neighbors(x):
            raise make_error(ErrorCode.E301, hypothesis="delta(X) >= 1", where=f"x = {x}")
    kept = minimal_dominating(view)
    pairs = []
    for y in kept:
        others = 0
        for z in kept:
            if z != y:
                others |= view.y_neighbors(z)
        private = view.y_neighbors(y) & ~others
        # minimality guarantees a private neighbour
        x = (private & -private).bit_length() - 1
        pairs.append((x, y))
    logger.debug("private matching: |Y'| = %d", len(pairs))
    return pairs


def is_bipartite_induced_matching(view: BipartiteView, pairs: List[Pair]) -> bool:
    xs = [x for x, _ in pairs]
    ys = [y for _, y in pairs]
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        return False
    for i, x in enumerate(xs):
        if x not in view.X:
            return False
        for j, y in enumerate(ys):
            if y not in view.Y or view.host.adjacent(x, y) != (i == j):
                return False
    return True


def extract_induced_matching(view: BipartiteView, n: int, p: int) -> List[Pair]:
    """Extract p pairs (x_i, y_i) inducing pK_2 in the view.

    Args:
        view: Bipartite view meeting the hypotheses
        n: Bound on |N(y) & X|
        p: Number of pairs wanted

    Returns:
        p verified pairs (x, y) with y in Y and x its private neighbour

    Raises:
        ProofStepError: E301 naming the failing hypothesis
    """
    check_hypotheses(view, n, p)
    pairs = private_matching(view)[:p]
    if len(pairs) < p or not is_bipartite_induced_matching(view, pairs):
        raise make_error(ErrorCode.E301, hypothesis="private neighbours", where="extraction")
    return pairs


def lemma_tight_instance(n: int, p: int, extra: bool = False) -> BipartiteView:
    """p-1 disjoint stars with n leaves each; leaves form X, centers form Y.

    |X| = n(p-1) and the induced matching number is p-1. With extra, one
    more edge (x, y) is added, |X| reaches n(p-1)+1 and the bound is met.
    X is 0..|X|-1 and Y follows.
    """
    stars = p - 1
    x_count = n * stars + (1 if extra else 0)
    y_count = stars + (1 if extra else 0)
    edges = [(i * n + j, x_count + i) for i in range(stars) for j in range(n)]
    if extra:
        edges.append((n * stars, x_count + stars))
    host = build_graph(x_count + y_count, edges)
    X = VertexSet((1 << x_count) - 1)
    Y = VertexSet(((1 << y_count) - 1) << x_count)
    return BipartiteView(host, X, Y)


def view_graph(view: BipartiteView) -> Graph:
    """The bipartite view as a standalone graph on the host labels."""
    edges = [(x, y) for x in view.X for y in bits(view.x_neighbors(x))]
    return build_graph(view.host.order, edges)
