"""Graph Values for ramseytype.

Graphs are immutable simple undirected graphs on the vertices 0..n-1.
Each adjacency row is a Python int used as a bitset, so there is no
fixed width limit; graphs far past the exact-search caps still fit.

Every constructor output passes through Graph.__post_init__, which
checks symmetry, irreflexivity and range.
"""

from dataclasses import dataclass
from typing import Any, Iterable, Iterator, List, Sequence, Tuple, Union

from .errors import ErrorCode, make_error


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class VertexSet:
    """A set of vertices with ascending iteration order."""
    mask: int = 0

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        return cls(mask_of(vertices))

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & ~other.mask)

    def issubset(self, other: "VertexSet") -> bool:
        return self.mask & ~other.mask == 0

    def first(self) -> int:
        """Smallest member; the set must be nonempty."""
        if not self.mask:
            raise ValueError("empty vertex set has no first member")
        return (self.mask & -self.mask).bit_length() - 1

    def to_list(self) -> List[int]:
        return list(bits(self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


# a plain int is read as a bitset
VertexLike = Union[VertexSet, int, Iterable[int]]


def _as_mask(vertices: VertexLike) -> int:
    if isinstance(vertices, VertexSet):
        return vertices.mask
    if isinstance(vertices, int):
        if vertices < 0:
            raise make_error(ErrorCode.E004, what="vertex mask", details=f"{vertices} is negative")
        return vertices
    return mask_of(vertices)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    Attributes:
        order: Number of vertices
        rows: rows[v] is the bitset of N(v)
    """
    order: int
    rows: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise make_error(ErrorCode.E004, what="order", details=f"{self.order} is negative")
        if len(self.rows) != self.order:
            raise make_error(
                ErrorCode.E004,
                what="adjacency rows",
                details=f"{len(self.rows)} rows for order {self.order}",
            )
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row >> v & 1:
                raise make_error(ErrorCode.E002, v=v)
            if row & ~full:
                u = max(bits(row & ~full))
                raise make_error(ErrorCode.E001, u=v, v=u, last=self.order - 1)
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise make_error(
                        ErrorCode.E004,
                        what="adjacency rows",
                        details=f"{u} is in N({v}) but {v} is not in N({u})",
                    )

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @property
    def vertices(self) -> VertexSet:
        return VertexSet(self.full_mask)

    @property
    def adj(self) -> Tuple[VertexSet, ...]:
        return tuple(VertexSet(row) for row in self.rows)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise make_error(ErrorCode.E003, vertex=v, order=self.order, last=self.order - 1)

    def neighbors(self, v: int) -> VertexSet:
        self.check_vertex(v)
        return VertexSet(self.rows[v])

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.rows[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.rows]

    def edges(self) -> List[Tuple[int, int]]:
        """All edges (u, v) with u < v, sorted."""
        result = []
        for u, row in enumerate(self.rows):
            for v in bits(row >> (u + 1)):
                result.append((u, u + 1 + v))
        return result

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def is_clique(self, vertices: VertexLike) -> bool:
        mask = _as_mask(vertices)
        return all(mask & ~self.rows[v] == 1 << v for v in bits(mask))

    def is_stable(self, vertices: VertexLike) -> bool:
        mask = _as_mask(vertices)
        return all(self.rows[v] & mask == 0 for v in bits(mask))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


def build_graph(order: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from an edge list.

    Args:
        order: Number of vertices
        edges: Unordered vertex pairs; duplicates collapse

    Returns:
        The graph with exactly those edges
    """
    if order < 0:
        raise make_error(ErrorCode.E004, what="order", details=f"{order} is negative")
    rows = [0] * order
    for pair in edges:
        u, v = pair[0], pair[1]
        if not (0 <= u < order and 0 <= v < order):
            raise make_error(ErrorCode.E001, u=u, v=v, last=order - 1)
        if u == v:
            raise make_error(ErrorCode.E002, v=v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, tuple(rows))


def empty_graph(order: int) -> Graph:
    return Graph(order, (0,) * order)


def induced(G: Graph, S: VertexLike) -> Tuple[Graph, Tuple[int, ...]]:
    """Induced subgraph G[S], relabelled 0..|S|-1 in ascending order of S.

    Returns:
        (subgraph, mapping) where mapping[new] is the original label
    """
    if isinstance(S, (VertexSet, int)):
        mask = _as_mask(S)
        if mask >> G.order:
            G.check_vertex(max(bits(mask)))
    else:
        members = list(S)
        for v in members:
            G.check_vertex(v)
        mask = mask_of(members)
    mapping = tuple(bits(mask))
    position = {old: new for new, old in enumerate(mapping)}
    rows = []
    for old in mapping:
        row = 0
        for u in bits(G.rows[old] & mask):
            row |= 1 << position[u]
        rows.append(row)
    return Graph(len(mapping), tuple(rows)), mapping


def delete_vertices(G: Graph, S: VertexLike) -> Tuple[Graph, Tuple[int, ...]]:
    """G - S, relabelled like induced()."""
    return induced(G, VertexSet(G.full_mask & ~_as_mask(S)))


def component_masks(G: Graph, within: int = -1) -> List[int]:
    """Connected components of G[within] as bitsets, ordered by minimum vertex."""
    remaining = G.full_mask & within
    blocks = []
    while remaining:
        start = remaining & -remaining
        block = start
        frontier = start
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= G.rows[v]
            frontier = reach & remaining & ~block
            block |= frontier
        blocks.append(block)
        remaining &= ~block
    return blocks


def components(G: Graph) -> List[VertexSet]:
    """Partition V(G) into connected components, ordered by minimum vertex."""
    return [VertexSet(block) for block in component_masks(G)]


def component_count(G: Graph, within: int = -1) -> int:
    return len(component_masks(G, within))


def is_connected(G: Graph) -> bool:
    """True when G has at most one component (the null graph counts as connected)."""
    return component_count(G) <= 1


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    shift = G1.order
    rows = G1.rows + tuple(row << shift for row in G2.rows)
    return Graph(G1.order + G2.order, rows)


def join_graphs(G1: Graph, G2: Graph) -> Graph:
    """The join G1 + G2: G2 is shifted by |G1| and every cross pair is an edge."""
    shift = G1.order
    left = G1.full_mask
    right = G2.full_mask << shift
    rows = tuple(row | right for row in G1.rows) + tuple((row << shift) | left for row in G2.rows)
    return Graph(G1.order + G2.order, rows)


def disjoint_copies(k: int, G: Graph) -> Graph:
    """kG; copy i occupies the block i*|G|..(i+1)*|G|-1."""
    if k < 0:
        raise make_error(ErrorCode.E004, what="copies", details=f"{k} is negative")
    result = empty_graph(0)
    for _ in range(k):
        result = disjoint_union(result, G)
    return result


def complement_graph(G: Graph) -> Graph:
    full = G.full_mask
    return Graph(G.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(G.rows)))


def relabel(G: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex i is G's vertex order[i]."""
    position = {old: new for new, old in enumerate(order)}
    rows = []
    for old in order:
        row = 0
        for u in bits(G.rows[old]):
            row |= 1 << position[u]
        rows.append(row)
    return Graph(G.order, tuple(rows))


def to_networkx(G: Graph) -> Any:
    """Convert to a networkx.Graph with the same integer labels."""
    import networkx as nx

    H = nx.Graph()
    H.add_nodes_from(range(G.order))
    H.add_edges_from(G.edges())
    return H


def from_networkx(H: Any) -> Graph:
    """Convert a networkx graph; nodes are relabelled by sorted order."""
    nodes = sorted(H.nodes())
    position = {node: i for i, node in enumerate(nodes)}
    return build_graph(len(nodes), [(position[u], position[v]) for u, v in H.edges() if u != v])
