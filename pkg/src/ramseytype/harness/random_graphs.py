"""Seeded random instances for the property checks.

Every generator takes an explicit random.Random so a run is reproduced
by its seed.
"""

import random
from typing import List, Tuple

from ..engines.coloring import ColoredClique
from ..engines.matching import BipartiteView
from ..errors import ErrorCode, make_error
from ..graph import Graph, VertexSet, build_graph


def _check_probability(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise make_error(ErrorCode.E004, what="edge probability", details=f"{p} is not in [0, 1]")


def random_graph(order: int, p: float, rng: random.Random) -> Graph:
    """G(order, p)."""
    _check_probability(p)
    edges = [(u, v) for v in range(order) for u in range(v) if rng.random() < p]
    return build_graph(order, edges)


def random_connected_graph(order: int, p: float, rng: random.Random) -> Graph:
    """A random spanning tree plus G(order, p) edges on top."""
    _check_probability(p)
    edges = set()
    for v in range(1, order):
        edges.add((rng.randrange(v), v))
    for v in range(order):
        for u in range(v):
            if rng.random() < p:
                edges.add((u, v))
    return build_graph(order, sorted(edges))


def random_bipartite_view(n: int, p: int, rng: random.Random,
                          density: float = 0.3) -> BipartiteView:
    """A view meeting the induced matching hypotheses for (n, p).

    X has n(p-1)+1 up to n(p-1)+1+n vertices, every x gets one Y
    neighbour with spare capacity, and extra X-Y edges are added while no
    y exceeds n neighbours in X. Edges inside X and inside Y are random
    and play no part in the view.
    """
    if n < 1 or p < 1:
        raise make_error(ErrorCode.E004, what="bipartite view", details=f"n={n}, p={p}")
    x_count = n * (p - 1) + 1 + rng.randrange(n + 1)
    y_count = rng.randint(-(-x_count // n), x_count)
    load = [0] * y_count
    pairs: List[Tuple[int, int]] = []
    for x in range(x_count):
        open_y = [y for y in range(y_count) if load[y] < n]
        y = rng.choice(open_y)
        load[y] += 1
        pairs.append((x, y))
    taken = set(pairs)
    for x in range(x_count):
        for y in range(y_count):
            if (x, y) not in taken and load[y] < n and rng.random() < density:
                load[y] += 1
                taken.add((x, y))
    edges = [(x, x_count + y) for x, y in sorted(taken)]
    for block_start, block_size in ((0, x_count), (x_count, y_count)):
        for v in range(block_size):
            for u in range(v):
                if rng.random() < density:
                    edges.append((block_start + u, block_start + v))
    host = build_graph(x_count + y_count, edges)
    X = VertexSet((1 << x_count) - 1)
    Y = VertexSet(((1 << y_count) - 1) << x_count)
    return BipartiteView(host, X, Y)


def random_coloring(order: int, m: int, rng: random.Random) -> ColoredClique:
    return ColoredClique.from_function(order, m, lambda u, v: rng.randrange(m))
