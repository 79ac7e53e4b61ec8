"""Vertex and Graph Parameters.

Exact, brute-force-semantics computation of the vertex parameters
deg(v) >= alpha(N(v)) >= c(N(v)) >= adh(v) and of the graph parameters
alpha, gamma, gamma_c and the induced matching number.

Conventions on empty inputs: alpha of the empty set is 0, c of the empty
set is 0, and an isolated vertex (or the vertex of K_1) has adhesion 0.
"""

import logging
from enum import Enum
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from .config.settings import SearchLimits
from .errors import ErrorCode, budget_error, make_error, order_cap_error
from .graph import Graph, VertexSet, bits, component_count, to_networkx

logger = logging.getLogger(__name__)


class ParamKind(Enum):
    """The four vertex parameters of the chain inequality."""
    DEGREE = "deg"
    LOCAL_INDEPENDENCE = "alpha"
    LOCAL_COMPONENTS = "c"
    ADHESION = "adh"

    @classmethod
    def parse(cls, text: str) -> "ParamKind":
        aliases = {
            "degree": cls.DEGREE,
            "local_independence": cls.LOCAL_INDEPENDENCE,
            "local_components": cls.LOCAL_COMPONENTS,
            "adhesion": cls.ADHESION,
        }
        key = text.strip().lower()
        if key in aliases:
            return aliases[key]
        for kind in cls:
            if kind.value == key:
                return kind
        raise make_error(
            ErrorCode.E004,
            what="parameter kind",
            details=f"'{text}' is not one of deg, alpha, c, adh",
        )


CHAIN = (
    ParamKind.DEGREE,
    ParamKind.LOCAL_INDEPENDENCE,
    ParamKind.LOCAL_COMPONENTS,
    ParamKind.ADHESION,
)


def _limits(limits: Optional[SearchLimits]) -> SearchLimits:
    return limits if limits is not None else SearchLimits()


def _clique_cover_bound(rows: Sequence[int], cand: int) -> int:
    # number of greedy cliques covering cand bounds any stable subset of it
    count = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        pool = cand & rows[v]
        while pool:
            w_low = pool & -pool
            w = w_low.bit_length() - 1
            cand ^= w_low
            pool &= rows[w]
            pool &= ~w_low
        count += 1
    return count


class StableSetSearch:
    """Branch and bound for a maximum stable set inside a vertex mask.

    Vertices are tried include-first in ascending order and only strict
    improvements replace the incumbent, so the result is the
    lexicographically least maximum stable set.
    """

    def __init__(self, rows: Sequence[int], budget: int, what: str = "maximum stable set"):
        self.rows = rows
        self.budget = budget
        self.what = what
        self.nodes = 0
        self.best = 0
        self.best_size = -1

    def run(self, within: int) -> int:
        self.best = 0
        self.best_size = -1
        self._search(0, 0, within)
        logger.debug("%s: %d node(s), size %d", self.what, self.nodes, self.best_size)
        return self.best

    def _search(self, chosen: int, size: int, cand: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise budget_error(self.what, self.budget)
        if not cand:
            if size > self.best_size:
                self.best = chosen
                self.best_size = size
            return
        if size + _clique_cover_bound(self.rows, cand) <= self.best_size:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        self._search(chosen | low, size + 1, cand & ~self.rows[v] & ~low)
        self._search(chosen, size, cand ^ low)


def max_stable_set(G: Graph, within: Optional[int] = None,
                   limits: Optional[SearchLimits] = None) -> VertexSet:
    """Lexicographically least maximum stable set of G[within]."""
    lim = _limits(limits)
    mask = G.full_mask if within is None else within & G.full_mask
    size = mask.bit_count()
    if size > lim.exact_cap:
        raise order_cap_error("independence number", size, lim.exact_cap)
    return VertexSet(StableSetSearch(G.rows, lim.node_budget).run(mask))


def max_clique(G: Graph, within: Optional[int] = None,
               limits: Optional[SearchLimits] = None) -> VertexSet:
    """Lexicographically least maximum clique of G[within]."""
    lim = _limits(limits)
    mask = G.full_mask if within is None else within & G.full_mask
    size = mask.bit_count()
    if size > lim.exact_cap:
        raise order_cap_error("clique number", size, lim.exact_cap)
    full = G.full_mask
    co_rows = [full & ~row & ~(1 << v) for v, row in enumerate(G.rows)]
    return VertexSet(StableSetSearch(co_rows, lim.node_budget, "maximum clique").run(mask))


def independence_number(G: Graph, limits: Optional[SearchLimits] = None) -> Tuple[int, VertexSet]:
    """Exact alpha(G) with one maximum stable set as witness.

    Raises:
        SearchLimitError: E201 when |G| exceeds the exact cap
    """
    witness = max_stable_set(G, limits=limits)
    return len(witness), witness


def adhesion(G: Graph, v: int) -> int:
    """c(G - v) - c(G) + 1."""
    G.check_vertex(v)
    return component_count(G, G.full_mask & ~(1 << v)) - component_count(G) + 1


def vertex_param(G: Graph, v: int, kind: ParamKind,
                 limits: Optional[SearchLimits] = None) -> int:
    """Value of one vertex parameter at v.

    Args:
        G: Host graph
        v: Vertex of G
        kind: Which parameter
        limits: Caps for the exact local independence search

    Returns:
        Non-negative parameter value
    """
    G.check_vertex(v)
    if kind is ParamKind.DEGREE:
        return G.rows[v].bit_count()
    if kind is ParamKind.LOCAL_INDEPENDENCE:
        return len(max_stable_set(G, G.rows[v], limits))
    if kind is ParamKind.LOCAL_COMPONENTS:
        return component_count(G, G.rows[v])
    return adhesion(G, v)


def parameter_table(G: Graph, kind: ParamKind,
                    limits: Optional[SearchLimits] = None) -> List[int]:
    if kind is ParamKind.ADHESION:
        base = component_count(G)
        return [
            component_count(G, G.full_mask & ~(1 << v)) - base + 1 for v in range(G.order)
        ]
    return [vertex_param(G, v, kind, limits) for v in range(G.order)]


def nontrivial_count(G: Graph, kind: ParamKind, threshold: int,
                     limits: Optional[SearchLimits] = None) -> int:
    """Number of vertices whose parameter is at least threshold."""
    return sum(1 for value in parameter_table(G, kind, limits) if value >= threshold)


def nontrivial_vertices(G: Graph, kind: ParamKind, threshold: int,
                        limits: Optional[SearchLimits] = None) -> VertexSet:
    values = parameter_table(G, kind, limits)
    return VertexSet.of(v for v, value in enumerate(values) if value >= threshold)


def h_index_of(values: Sequence[int]) -> int:
    """Largest k with at least k values >= k; 0 when no k >= 1 qualifies."""
    h = 0
    for k, value in enumerate(sorted(values, reverse=True), start=1):
        if value >= k:
            h = k
        else:
            break
    return h


def h_index(G: Graph, kind: ParamKind, limits: Optional[SearchLimits] = None) -> int:
    return h_index_of(parameter_table(G, kind, limits))


def _closed_rows(G: Graph) -> List[int]:
    return [row | (1 << v) for v, row in enumerate(G.rows)]


def _dominates(closed: Sequence[int], mask: int, full: int) -> bool:
    covered = 0
    for v in bits(mask):
        covered |= closed[v]
    return covered & full == full


def _plain_domination(G: Graph, budget: int) -> int:
    closed = _closed_rows(G)
    full = G.full_mask
    nodes = 0

    def search(chosen: int, covered: int, left: int) -> Optional[int]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise budget_error("domination number", budget)
        undominated = full & ~covered
        if not undominated:
            return chosen
        if left == 0:
            return None
        low = undominated & -undominated
        u = low.bit_length() - 1
        for w in bits(closed[u]):
            found = search(chosen | (1 << w), covered | closed[w], left - 1)
            if found is not None:
                return found
        return None

    for k in range(G.order + 1):
        found = search(0, 0, k)
        if found is not None:
            logger.debug("domination: gamma=%d after %d node(s)", k, nodes)
            return found
    return full


def _connected_domination(G: Graph, budget: int) -> int:
    closed = _closed_rows(G)
    full = G.full_mask
    nodes = 0
    for k in range(1, G.order + 1):
        for combo in combinations(range(G.order), k):
            nodes += 1
            if nodes > budget:
                raise budget_error("connected domination number", budget)
            mask = 0
            for v in combo:
                mask |= 1 << v
            if _dominates(closed, mask, full) and component_count(G, mask) == 1:
                logger.debug("connected domination: gamma_c=%d after %d node(s)", k, nodes)
                return mask
    return full


def domination(G: Graph, connected: bool = False,
               limits: Optional[SearchLimits] = None) -> Tuple[int, VertexSet]:
    """Minimum (connected) dominating set with a certificate.

    The connected certificate is the first minimum set in lexicographic
    order, so for P_4 it is {1, 2}.

    Raises:
        SearchLimitError: E201 above the exact cap, E203 for a
            disconnected graph with connected=True
    """
    lim = _limits(limits)
    if G.order > lim.exact_cap:
        raise order_cap_error("domination number", G.order, lim.exact_cap)
    if G.order == 0:
        return 0, VertexSet()
    if connected:
        count = component_count(G)
        if count > 1:
            raise make_error(
                ErrorCode.E203, what="connected domination number", components=count
            )
        mask = _connected_domination(G, lim.node_budget)
    else:
        mask = _plain_domination(G, lim.node_budget)
    return mask.bit_count(), VertexSet(mask)


def is_dominating(G: Graph, S: VertexSet) -> bool:
    return _dominates(_closed_rows(G), S.mask, G.full_mask)


def is_induced_matching(G: Graph, edges: Sequence[Tuple[int, int]]) -> bool:
    """True when the endpoints of edges induce exactly those edges."""
    seen = 0
    for u, v in edges:
        if not G.adjacent(u, v):
            return False
        pair = (1 << u) | (1 << v)
        if seen & pair:
            return False
        seen |= pair
    for u, v in edges:
        others = seen & ~((1 << u) | (1 << v))
        if (G.rows[u] | G.rows[v]) & others:
            return False
    return True


def induced_matching_number(G: Graph,
                            limits: Optional[SearchLimits] = None
                            ) -> Tuple[int, List[Tuple[int, int]]]:
    """Exact induced matching number with a verified witness.

    Solved as a maximum stable set in the conflict graph whose vertices
    are the edges of G; two edges conflict when they share a vertex or
    an edge of G joins them.
    """
    lim = _limits(limits)
    if G.order > lim.exact_cap:
        raise order_cap_error("induced matching number", G.order, lim.exact_cap)
    edges = G.edges()
    reach = [G.rows[u] | G.rows[v] | (1 << u) | (1 << v) for u, v in edges]
    conflict = []
    for i, (u, v) in enumerate(edges):
        row = 0
        for j, (a, b) in enumerate(edges):
            if i != j and (reach[i] >> a & 1 or reach[i] >> b & 1):
                row |= 1 << j
        conflict.append(row)
    chosen = StableSetSearch(conflict, lim.node_budget, "induced matching").run(
        (1 << len(edges)) - 1
    )
    witness = [edges[i] for i in bits(chosen)]
    if not is_induced_matching(G, witness):
        raise make_error(ErrorCode.E004, what="induced matching", details="witness failed to verify")
    return len(witness), witness


def cut_vertices(G: Graph) -> VertexSet:
    """Articulation points, i.e. the vertices of adhesion at least 2."""
    return VertexSet.of(nx.articulation_points(to_networkx(G)))
