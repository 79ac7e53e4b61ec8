"""Edge-colored complete graphs and monochromatic cliques.

find_mono_clique first runs the majority-split chain from the usual
proof of Ramsey's theorem, then falls back to an exhaustive per-color
clique search when the chain is too short.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from ..config.settings import SearchLimits
from ..errors import ErrorCode, budget_error, make_error, order_cap_error
from ..graph import VertexSet, bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ColoredClique:
    """K_N with every pair (i, j), i < j, colored in 0..m-1."""
    order: int
    colors: Dict[Tuple[int, int], int]
    m: int = 2
    _rows: Dict[int, Tuple[int, ...]] = field(default_factory=dict, init=False, repr=False,
                                              compare=False)

    def __post_init__(self) -> None:
        if self.m < 1:
            raise make_error(ErrorCode.E004, what="colored clique", details="m must be >= 1")
        expected = self.order * (self.order - 1) // 2
        if len(self.colors) != expected:
            raise make_error(
                ErrorCode.E004,
                what="colored clique",
                details=f"{len(self.colors)} colored pairs, expected {expected}",
            )
        rows: Dict[int, List[int]] = {}
        for (i, j), c in self.colors.items():
            if not 0 <= i < j < self.order:
                raise make_error(
                    ErrorCode.E004, what="colored clique", details=f"bad pair ({i}, {j})"
                )
            if not 0 <= c < self.m:
                raise make_error(
                    ErrorCode.E004, what="colored clique", details=f"color {c} not in 0..{self.m - 1}"
                )
            row = rows.setdefault(c, [0] * self.order)
            row[i] |= 1 << j
            row[j] |= 1 << i
        object.__setattr__(self, "_rows", {c: tuple(r) for c, r in rows.items()})

    @classmethod
    def from_function(cls, order: int, m: int,
                      fn: Callable[[int, int], int]) -> "ColoredClique":
        """Color pair (i, j), i < j, with fn(i, j)."""
        colors = {(i, j): fn(i, j) for j in range(order) for i in range(j)}
        return cls(order, colors, m)

    def color(self, u: int, v: int) -> int:
        return self.colors[(u, v) if u < v else (v, u)]

    def color_rows(self, c: int) -> Tuple[int, ...]:
        """Adjacency bitsets of the color-c graph."""
        return self._rows.get(c, (0,) * self.order)

    def used_colors(self) -> List[int]:
        return sorted(self._rows)

    def is_monochromatic(self, vertices: VertexSet, c: int) -> bool:
        members = vertices.to_list()
        return all(
            self.color(u, v) == c for k, u in enumerate(members) for v in members[k + 1:]
        )


def pentagon_coloring() -> ColoredClique:
    """K_5 split into the pentagon (color 0) and the pentagram (color 1)."""
    return ColoredClique.from_function(5, 2, lambda i, j: 0 if (j - i) % 5 in (1, 4) else 1)


def _majority_chain(cc: ColoredClique) -> List[Tuple[int, Optional[int]]]:
    # each vertex keeps the color shared with everything chosen after it
    pool = list(range(cc.order))
    chain: List[Tuple[int, Optional[int]]] = []
    while pool:
        v = pool.pop(0)
        if not pool:
            chain.append((v, None))
            break
        classes: Dict[int, List[int]] = {}
        for u in pool:
            classes.setdefault(cc.color(v, u), []).append(u)
        c = max(sorted(classes), key=lambda k: len(classes[k]))
        chain.append((v, c))
        pool = classes[c]
    return chain


def _constructive(cc: ColoredClique, q: int) -> Optional[Tuple[int, VertexSet]]:
    chain = _majority_chain(cc)
    last = chain[-1][0]
    for c in cc.used_colors():
        members = [v for v, color in chain[:-1] if color == c] + [last]
        if len(members) >= q:
            return c, VertexSet.of(members[:q - 1] + [last])
    return None


class _CliqueSearch:
    def __init__(self, rows: Tuple[int, ...], q: int, budget: int):
        self.rows = rows
        self.q = q
        self.budget = budget
        self.nodes = 0

    def run(self, cand: int) -> Optional[int]:
        return self._search(0, 0, cand)

    def _search(self, chosen: int, size: int, cand: int) -> Optional[int]:
        if size == self.q:
            return chosen
        self.nodes += 1
        if self.nodes > self.budget:
            raise budget_error("monochromatic clique search", self.budget)
        if size + cand.bit_count() < self.q:
            return None
        for v in bits(cand):
            cand &= ~(1 << v)
            found = self._search(chosen | (1 << v), size + 1, cand & self.rows[v])
            if found is not None:
                return found
            if size + cand.bit_count() < self.q:
                return None
        return None


def find_mono_clique(cc: ColoredClique, q: int,
                     limits: Optional[SearchLimits] = None
                     ) -> Optional[Tuple[int, VertexSet]]:
    """Find q vertices whose pairs all share one color.

    Args:
        cc: The colored clique
        q: Target clique order
        limits: mono_clique_cap bounds the exhaustive fallback

    Returns:
        (color, vertices), or None once the exhaustive search proves
        there is no such clique

    Raises:
        SearchLimitError: E201 when the chain is too short and the order
            exceeds mono_clique_cap
    """
    lim = limits if limits is not None else SearchLimits()
    if q > cc.order:
        return None
    if q <= 1:
        return 0, VertexSet((1 << q) - 1)
    if cc.m == 1:
        return 0, VertexSet((1 << q) - 1)

    found = _constructive(cc, q)
    if found is None:
        if cc.order > lim.mono_clique_cap:
            raise order_cap_error("monochromatic clique search", cc.order, lim.mono_clique_cap)
        full = (1 << cc.order) - 1
        for c in cc.used_colors():
            mask = _CliqueSearch(cc.color_rows(c), q, lim.node_budget).run(full)
            if mask is not None:
                found = (c, VertexSet(mask))
                break
        else:
            logger.debug("no monochromatic K_%d in a %d-colored K_%d", q, cc.m, cc.order)
            return None

    c, vertices = found
    if len(vertices) != q or not cc.is_monochromatic(vertices, c):
        raise make_error(
            ErrorCode.E004, what="monochromatic clique", details="result failed to verify"
        )
    return found
