"""Induced Containment, Freeness and Isomorphism.

find_induced is a complete backtracking search. Pattern vertices are
placed in label order and host candidates are tried in ascending order,
so the first embedding found is the lexicographically least one. A node
budget separates "absent" from "gave up": running out raises E202.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .config.settings import SearchLimits
from .errors import budget_error, order_cap_error
from .generators import FamilyMember, FamilySpec
from .graph import Graph, VertexSet, bits, relabel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Embedding:
    """Injective map V(H) -> V(G); mapping[i] is the image of pattern vertex i."""
    mapping: Tuple[int, ...]

    @property
    def image(self) -> VertexSet:
        return VertexSet.of(self.mapping)

    def as_dict(self) -> Dict[int, int]:
        return dict(enumerate(self.mapping))

    def compose(self, outer: Sequence[int]) -> "Embedding":
        """Push the images through outer, e.g. an induced() relabelling."""
        return Embedding(tuple(outer[v] for v in self.mapping))


def verify_embedding(G: Graph, H: Graph, embedding: Embedding) -> bool:
    """Check injectivity, range and the induced condition in both directions."""
    m = embedding.mapping
    if len(m) != H.order or len(set(m)) != len(m):
        return False
    if any(not 0 <= v < G.order for v in m):
        return False
    for i in range(H.order):
        for j in range(i + 1, H.order):
            if H.adjacent(i, j) != G.adjacent(m[i], m[j]):
                return False
    return True


def _limits(limits: Optional[SearchLimits]) -> SearchLimits:
    return limits if limits is not None else SearchLimits()


class _InducedSearch:
    def __init__(self, G: Graph, H: Graph, budget: int):
        self.G = G
        self.H = H
        self.budget = budget
        self.nodes = 0
        self.mapping: List[int] = []
        g_deg = G.degrees()
        # host vertices able to host pattern vertex i by degree
        self.by_degree = []
        for i in range(H.order):
            need = H.rows[i].bit_count()
            self.by_degree.append(sum(1 << v for v, d in enumerate(g_deg) if d >= need))

    def run(self) -> Optional[Tuple[int, ...]]:
        found = self._extend(0, 0)
        logger.debug("find_induced: %d node(s)", self.nodes)
        return found

    def _extend(self, i: int, used: int) -> Optional[Tuple[int, ...]]:
        if i == self.H.order:
            return tuple(self.mapping)
        self.nodes += 1
        if self.nodes > self.budget:
            raise budget_error("induced subgraph search", self.budget)
        cand = self.by_degree[i] & ~used
        h_row = self.H.rows[i]
        for j, g in enumerate(self.mapping):
            if h_row >> j & 1:
                cand &= self.G.rows[g]
            else:
                cand &= ~self.G.rows[g]
        for g in bits(cand):
            self.mapping.append(g)
            found = self._extend(i + 1, used | (1 << g))
            if found is not None:
                return found
            self.mapping.pop()
        return None


def find_induced(G: Graph, H: Graph, limits: Optional[SearchLimits] = None) -> Optional[Embedding]:
    """Find the lexicographically least induced copy of H in G.

    Args:
        G: Host graph
        H: Pattern graph
        limits: node_budget bounds the search

    Returns:
        A verified Embedding, or None when H is not an induced subgraph

    Raises:
        SearchLimitError: E202 when the node budget runs out
    """
    if H.order > G.order or H.edge_count() > G.edge_count():
        return None
    found = _InducedSearch(G, H, _limits(limits).node_budget).run()
    if found is None:
        return None
    embedding = Embedding(found)
    assert verify_embedding(G, H, embedding)
    return embedding


FamilyLike = Union[FamilySpec, Sequence[Graph], Sequence[FamilyMember]]


def _members(family: FamilyLike) -> List[Tuple[str, Graph]]:
    if isinstance(family, FamilySpec):
        return [(str(m.name), m.graph) for m in family.members]
    result = []
    for i, item in enumerate(family):
        if isinstance(item, FamilyMember):
            result.append((str(item.name), item.graph))
        else:
            result.append((f"H{i}", item))
    return result


@dataclass
class FreenessVerdict:
    """Outcome of a freeness test; member/embedding describe the first violation."""
    free: bool
    member: Optional[str] = None
    member_index: Optional[int] = None
    embedding: Optional[Embedding] = None


def is_family_free(G: Graph, family: FamilyLike,
                   limits: Optional[SearchLimits] = None) -> FreenessVerdict:
    """Test G for every member of family, in member order."""
    for index, (name, H) in enumerate(_members(family)):
        embedding = find_induced(G, H, limits)
        if embedding is not None:
            return FreenessVerdict(False, name, index, embedding)
    return FreenessVerdict(True)


@dataclass
class ContainmentCertificate:
    """For one right-hand member: the first left member inside it, if any."""
    right: str
    left: Optional[str] = None
    left_index: Optional[int] = None
    embedding: Optional[Embedding] = None


@dataclass
class OrderVerdict:
    holds: bool
    certificates: List[ContainmentCertificate] = field(default_factory=list)


def family_le(left: FamilyLike, right: FamilyLike,
              limits: Optional[SearchLimits] = None) -> OrderVerdict:
    """Decide left <= right: every right member contains some left member.

    Every certificate is listed, including failing ones, so callers can
    show which right member escaped.
    """
    lefts = _members(left)
    certificates = []
    holds = True
    for right_name, H2 in _members(right):
        certificate = ContainmentCertificate(right_name)
        for index, (left_name, H1) in enumerate(lefts):
            embedding = find_induced(H2, H1, limits)
            if embedding is not None:
                certificate = ContainmentCertificate(right_name, left_name, index, embedding)
                break
        if certificate.embedding is None:
            holds = False
        certificates.append(certificate)
    return OrderVerdict(holds, certificates)


CanonicalForm = Tuple[int, int]


def _encode(G: Graph, order: Sequence[int]) -> int:
    # upper triangle in graph6 order, first pair most significant
    code = 0
    for j in range(1, len(order)):
        row = G.rows[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _refine(G: Graph, cells: List[List[int]]) -> List[List[int]]:
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        refined: List[List[int]] = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: Dict[Tuple[int, ...], List[int]] = {}
            for v in cell:
                signature = tuple((G.rows[v] & m).bit_count() for m in masks)
                groups.setdefault(signature, []).append(v)
            for signature in sorted(groups):
                refined.append(groups[signature])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _pairwise_twins(G: Graph, cell: Sequence[int]) -> bool:
    first = cell[0]
    for v in cell[1:]:
        if G.rows[first] & ~(1 << v) != G.rows[v] & ~(1 << first):
            return False
    return True


class _CanonicalSearch:
    def __init__(self, G: Graph, budget: int):
        self.G = G
        self.budget = budget
        self.nodes = 0
        self.best: Optional[int] = None
        self.best_order: List[int] = []

    def run(self) -> Tuple[int, List[int]]:
        self._search(_refine(self.G, [list(range(self.G.order))]) if self.G.order else [])
        assert self.best is not None
        return self.best, self.best_order

    def _search(self, cells: List[List[int]]) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise budget_error("canonical labelling", self.budget)
        target = next((k for k, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            order = [cell[0] for cell in cells]
            code = _encode(self.G, order)
            if self.best is None or code < self.best:
                self.best = code
                self.best_order = order
            return
        cell = cells[target]
        choices = cell[:1] if _pairwise_twins(self.G, cell) else cell
        for v in choices:
            rest = [u for u in cell if u != v]
            split = cells[:target] + [[v], rest] + cells[target + 1:]
            self._search(_refine(self.G, split))


def canonical_labeling(G: Graph, limits: Optional[SearchLimits] = None) -> List[int]:
    """Vertex order putting G in canonical form: position i holds order[i]."""
    lim = _limits(limits)
    if G.order > lim.exact_cap:
        raise order_cap_error("canonical labelling", G.order, lim.exact_cap)
    return _CanonicalSearch(G, lim.node_budget).run()[1]


def canonical_form(G: Graph, limits: Optional[SearchLimits] = None) -> CanonicalForm:
    """Isomorphism invariant (order, code); equal forms mean isomorphic graphs."""
    lim = _limits(limits)
    if G.order > lim.exact_cap:
        raise order_cap_error("canonical labelling", G.order, lim.exact_cap)
    code, _ = _CanonicalSearch(G, lim.node_budget).run()
    return G.order, code


def canonical_graph(G: Graph, limits: Optional[SearchLimits] = None) -> Graph:
    return relabel(G, canonical_labeling(G, limits))


def are_isomorphic(G: Graph, H: Graph, limits: Optional[SearchLimits] = None) -> bool:
    if G.order != H.order or G.edge_count() != H.edge_count():
        return False
    if sorted(G.degrees()) != sorted(H.degrees()):
        return False
    return canonical_form(G, limits) == canonical_form(H, limits)
