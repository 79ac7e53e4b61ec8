"""Extremal searches over the enumerated classes.

For each order the table records the largest number of nontrivial
vertices among family-free graphs, with the first graph (in canonical
order) that reaches it. Graphs are checked in canonical order and the
witness is chosen after the merge, so the table does not depend on the
number of workers.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..codec import encode_graph6
from ..config.settings import SearchLimits, Settings
from ..errors import ErrorCode, make_error, order_cap_error
from ..generators import FamilySpec
from ..graph import Graph
from ..isomorphism import is_family_free
from ..params import ParamKind, nontrivial_count
from .enumeration import enumerate_graphs
from .workers import apply_pool

logger = logging.getLogger(__name__)


@dataclass
class ExtremalRow:
    """One order of an extremal table; count is None when no graph is free."""
    order: int
    graphs: int
    free_graphs: int
    count: Optional[int] = None
    witness: Optional[str] = None

    @property
    def empty(self) -> bool:
        return self.count is None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "graphs": self.graphs,
            "free_graphs": self.free_graphs,
            "max_count": self.count,
            "witness": self.witness,
        }


@dataclass
class ExtremalTable:
    family: str
    kind: ParamKind
    threshold: int
    connected_only: bool
    rows: List[ExtremalRow] = field(default_factory=list)

    @property
    def maximum(self) -> Optional[int]:
        counts = [row.count for row in self.rows if row.count is not None]
        return max(counts) if counts else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.family,
            "param": self.kind.value,
            "threshold": self.threshold,
            "connected_only": self.connected_only,
            "maximum": self.maximum,
            "rows": [row.to_dict() for row in self.rows],
        }


ExtremalTask = Tuple[Graph, FamilySpec, ParamKind, int, SearchLimits]


def _measure(task: ExtremalTask) -> Optional[int]:
    G, family, kind, threshold, limits = task
    if not is_family_free(G, family, limits).free:
        return None
    return nontrivial_count(G, kind, threshold, limits)


def extremal_search(family: FamilySpec, kind: ParamKind, threshold: int, max_n: int,
                    connected_only: bool = False,
                    settings: Optional[Settings] = None) -> ExtremalTable:
    """Tabulate max nontrivial_count over family-free graphs of each order.

    Args:
        family: Forbidden family
        kind: Vertex parameter
        threshold: A vertex is nontrivial when its parameter is >= threshold
        max_n: Largest order, at most the enumeration cap
        connected_only: Restrict to connected graphs
        settings: Limits, worker count and progress display

    Raises:
        SearchLimitError: E201 above the enumeration cap, E202 when a
            search gives up (never reported as a smaller count)
    """
    settings = settings if settings is not None else Settings.default()
    limits = settings.limits
    if max_n > limits.enumeration_cap:
        raise order_cap_error("extremal search", max_n, limits.enumeration_cap)
    if max_n < 1 or threshold < 0:
        raise make_error(ErrorCode.E004, what="extremal search",
                         details=f"max_n={max_n}, threshold={threshold}")
    table = ExtremalTable(str(family), kind, threshold, connected_only)
    for order in range(1, max_n + 1):
        graphs = list(enumerate_graphs(order, connected_only, limits))
        tasks = [(G, family, kind, threshold, limits) for G in graphs]
        counts = apply_pool(_measure, tasks, settings.harness.jobs,
                            settings.harness.progress, f"extremal n={order}")
        row = ExtremalRow(order, len(graphs), sum(1 for c in counts if c is not None))
        for G, count in zip(graphs, counts):
            if count is not None and (row.count is None or count > row.count):
                row.count = count
                row.witness = encode_graph6(G)
        logger.info("extremal: order %d, %d/%d free, max %s",
                    order, row.free_graphs, row.graphs, row.count)
        table.rows.append(row)
    return table
