"""Machine certificates for small Ramsey facts.

certify_small_ramsey sweeps every 2-coloring of K_6 for a monochromatic
triangle and checks that the pentagon coloring of K_5 has none, which
together give R_2(3) = 6. estimate_n0 measures from enumeration how many
vertices force an induced P_n, K_n or K_{1,n} in a connected graph.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple

from ..codec import encode_graph6
from ..config.settings import SearchLimits, Settings
from ..engines.coloring import ColoredClique, find_mono_clique, pentagon_coloring
from ..engines.trichotomy import path_clique_star
from ..errors import ErrorCode, make_error
from ..graph import Graph, VertexSet
from .enumeration import enumerate_graphs
from .workers import apply_pool, pbar

logger = logging.getLogger(__name__)

CLIQUE_ORDER = 6
TRIANGLE = 3


@dataclass
class SmallRamseyCertificate:
    """Every 2-coloring of K_6 has a monochromatic triangle; the pentagon K_5 has none."""
    colorings: int
    passed: int
    failures: List[int] = field(default_factory=list)
    pentagon_triangles: int = 0
    pentagon_clique: Optional[Tuple[int, List[int]]] = None

    @property
    def holds(self) -> bool:
        return (self.passed == self.colorings and self.pentagon_triangles == 0
                and self.pentagon_clique is None)

    @property
    def value(self) -> Optional[int]:
        return CLIQUE_ORDER if self.holds else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "constant": "R_2(3)",
            "value": self.value,
            "holds": self.holds,
            "k6_colorings": self.colorings,
            "k6_passed": self.passed,
            "k6_failures": list(self.failures),
            "pentagon_triangles": self.pentagon_triangles,
            "pentagon_mono_clique": (
                None if self.pentagon_clique is None
                else {"color": self.pentagon_clique[0], "vertices": self.pentagon_clique[1]}
            ),
        }


def coloring_from_bits(order: int, pattern: int) -> ColoredClique:
    """Color the k-th pair (i < j, j-major order) with bit k of pattern."""
    pairs = [(i, j) for j in range(order) for i in range(j)]
    colors = {pair: pattern >> k & 1 for k, pair in enumerate(pairs)}
    return ColoredClique(order, colors, 2)


def certify_small_ramsey(limits: Optional[SearchLimits] = None,
                         progress: bool = False) -> SmallRamseyCertificate:
    pair_count = CLIQUE_ORDER * (CLIQUE_ORDER - 1) // 2
    total = 1 << pair_count
    certificate = SmallRamseyCertificate(total, 0)
    for pattern in pbar(range(total), total, "K6 colorings", progress):
        if find_mono_clique(coloring_from_bits(CLIQUE_ORDER, pattern), TRIANGLE, limits):
            certificate.passed += 1
        else:
            certificate.failures.append(pattern)

    pentagon = pentagon_coloring()
    certificate.pentagon_triangles = sum(
        1
        for triple in combinations(range(pentagon.order), TRIANGLE)
        if any(pentagon.is_monochromatic(VertexSet.of(triple), c) for c in range(pentagon.m))
    )
    found = find_mono_clique(pentagon, TRIANGLE, limits)
    if found is not None:
        certificate.pentagon_clique = (found[0], found[1].to_list())
    logger.info("small Ramsey certificate: %d/%d colorings, pentagon triangles %d",
                certificate.passed, total, certificate.pentagon_triangles)
    return certificate


@dataclass
class ShapeRow:
    """Connected classes of one order against the P_n / K_n / K_{1,n} target.

    worst is the smallest best-shape size over the classes, and
    worst_graph the first class attaining it.
    """
    order: int
    graphs: int
    covered: int
    worst: int
    worst_graph: str

    @property
    def all_covered(self) -> bool:
        return self.covered == self.graphs

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "graphs": self.graphs,
            "covered": self.covered,
            "worst": self.worst,
            "worst_graph": self.worst_graph,
        }


@dataclass
class ShapeThresholdEstimate:
    n: int
    rows: List[ShapeRow] = field(default_factory=list)

    @property
    def estimate(self) -> Optional[int]:
        """Smallest order from which every enumerated order is covered."""
        result = None
        for row in reversed(self.rows):
            if not row.all_covered:
                break
            result = row.order
        return result

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "estimate": self.estimate,
            "rows": [row.to_dict() for row in self.rows],
        }


def _best_shape(task: Tuple[Graph, SearchLimits]) -> int:
    G, limits = task
    result = path_clique_star(G, limits)
    # star sizes count leaves
    return max(k for k, _ in result.candidates.values())


def estimate_n0(n: int, max_order: int, settings: Optional[Settings] = None
                ) -> ShapeThresholdEstimate:
    """How many vertices a connected graph needs before P_n, K_n or K_{1,n} is forced.

    Args:
        n: Shape size (path and clique vertices, star leaves)
        max_order: Largest order to enumerate
        settings: Limits, worker count and progress display

    Returns:
        One row per order plus the empirical estimate, None while the
        largest order still has an uncovered class
    """
    settings = settings if settings is not None else Settings.default()
    if n < 1:
        raise make_error(ErrorCode.E004, what="shape threshold", details="n must be >= 1")
    estimate = ShapeThresholdEstimate(n)
    for order in range(1, max_order + 1):
        graphs = list(enumerate_graphs(order, connected_only=True, limits=settings.limits))
        sizes = apply_pool(_best_shape, [(G, settings.limits) for G in graphs],
                           settings.harness.jobs, settings.harness.progress, f"shapes n={order}")
        worst = min(sizes)
        estimate.rows.append(ShapeRow(
            order,
            len(graphs),
            sum(1 for size in sizes if size >= n),
            worst,
            encode_graph6(graphs[sizes.index(worst)]),
        ))
    return estimate
