"""Exhaustive enumeration of small graphs up to isomorphism.

Order k+1 is built from order k by attaching a new vertex to every
subset of the old ones and keeping one graph per canonical form. Every
graph on k+1 vertices arises this way (delete any vertex), so each class
appears exactly once. Classes come out as canonical graphs, sorted by
canonical form, which makes the stream identical from run to run.
"""

import logging
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from ..config.settings import SearchLimits
from ..errors import order_cap_error
from ..graph import Graph, is_connected
from ..isomorphism import CanonicalForm, canonical_form

logger = logging.getLogger(__name__)


def graph_from_form(form: CanonicalForm) -> Graph:
    """Rebuild the canonical graph whose canonical form is form."""
    order, code = form
    rows = [0] * order
    position = order * (order - 1) // 2
    for j in range(1, order):
        for i in range(j):
            position -= 1
            if code >> position & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(order, tuple(rows))


def _attach(G: Graph, neighbours: int) -> Graph:
    v = G.order
    rows = [row | ((neighbours >> u & 1) << v) for u, row in enumerate(G.rows)]
    rows.append(neighbours)
    return Graph(v + 1, tuple(rows))


@lru_cache(maxsize=None)
def _classes(order: int, budget: int) -> Tuple[CanonicalForm, ...]:
    if order == 0:
        return ((0, 0),)
    limits = SearchLimits(node_budget=budget)
    forms = set()
    for parent in _classes(order - 1, budget):
        G = graph_from_form(parent)
        for neighbours in range(1 << G.order):
            forms.add(canonical_form(_attach(G, neighbours), limits))
    logger.info("enumeration: %d class(es) on %d vertices", len(forms), order)
    return tuple(sorted(forms))


def enumerate_graphs(n: int, connected_only: bool = False,
                     limits: Optional[SearchLimits] = None) -> Iterator[Graph]:
    """Yield one canonical graph per isomorphism class on n vertices.

    Args:
        n: Order of the graphs
        connected_only: Skip disconnected classes
        limits: Search limits; enumeration_cap bounds n

    Raises:
        SearchLimitError: E201 when n exceeds the enumeration cap
    """
    lim = limits if limits is not None else SearchLimits()
    if n > lim.enumeration_cap:
        raise order_cap_error("graph enumeration", n, lim.enumeration_cap)
    if n < 0:
        return
    for form in _classes(n, lim.node_budget):
        G = graph_from_form(form)
        if connected_only and not is_connected(G):
            continue
        yield G


def class_count(n: int, connected_only: bool = False,
                limits: Optional[SearchLimits] = None) -> int:
    return sum(1 for _ in enumerate_graphs(n, connected_only, limits))


def enumerate_up_to(max_n: int, connected_only: bool = False,
                    limits: Optional[SearchLimits] = None) -> List[Graph]:
    """All classes on 1..max_n vertices, smaller orders first."""
    graphs: List[Graph] = []
    for n in range(1, max_n + 1):
        graphs.extend(enumerate_graphs(n, connected_only, limits))
    return graphs
