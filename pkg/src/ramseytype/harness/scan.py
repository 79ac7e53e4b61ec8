"""Corpus scans: run invariant checks over a stream of graphs.

The stream is read up front, split across workers and merged back by
input index, so a report depends only on the input and the check list.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from ..codec import encode_graph6
from ..config.settings import SearchLimits, Settings
from ..generators import FamilySpec
from ..graph import Graph
from ..isomorphism import is_family_free
from .checks import resolve_checks, run_check
from .workers import apply_pool

logger = logging.getLogger(__name__)


@dataclass
class Violation:
    index: int
    graph6: str
    check: str
    message: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "graph6": self.graph6,
            "check": self.check,
            "message": self.message,
        }


@dataclass
class GraphRecord:
    """Result of scanning one graph.

    Attributes:
        index: Position in the input stream
        graph6: The graph as read
        order: Number of vertices
        violations: Failed checks, in check order
        free: Freeness verdict when the scan was given a family
        member: First family member found when not free
    """
    index: int
    graph6: str
    order: int
    violations: List[Violation] = field(default_factory=list)
    free: Optional[bool] = None
    member: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "index": self.index,
            "graph6": self.graph6,
            "order": self.order,
            "violations": len(self.violations),
        }
        if self.free is not None:
            data["free"] = self.free
            data["member"] = self.member
        return data


@dataclass
class CorpusReport:
    """All records of a scan, in input order."""
    checks: List[str]
    records: List[GraphRecord] = field(default_factory=list)
    family: Optional[str] = None
    skipped: int = 0

    @property
    def violations(self) -> List[Violation]:
        return [v for record in self.records for v in record.violations]

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def free_count(self) -> int:
        return sum(1 for record in self.records if record.free)

    def to_dict(self, include_records: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "checks": list(self.checks),
            "graphs": len(self.records),
            "skipped": self.skipped,
            "passed": self.passed,
            "violations": [v.to_dict() for v in self.violations],
        }
        if self.family is not None:
            data["family"] = self.family
            data["free_graphs"] = self.free_count
        if include_records:
            data["records"] = [record.to_dict() for record in self.records]
        return data


ScanTask = Tuple[int, Graph, Tuple[str, ...], SearchLimits, Optional[FamilySpec]]


def _scan_one(task: ScanTask) -> GraphRecord:
    index, G, checks, limits, family = task
    graph6 = encode_graph6(G)
    record = GraphRecord(index, graph6, G.order)
    for check_id in checks:
        for message in run_check(check_id, G, limits):
            record.violations.append(Violation(index, graph6, check_id, message))
    if family is not None:
        verdict = is_family_free(G, family, limits)
        record.free = verdict.free
        record.member = verdict.member
    return record


def scan_corpus(graphs: Iterable[Graph], checks: Sequence[str],
                settings: Optional[Settings] = None,
                family: Optional[FamilySpec] = None) -> CorpusReport:
    """Run every check on every graph.

    Args:
        graphs: A CorpusStream, an enumeration, or any graphs
        checks: Check ids from CHECKS, or "all"
        settings: Limits, worker count and progress display
        family: Also record freeness against this family

    Returns:
        CorpusReport with records in input order

    Raises:
        ProofStepError: E303 for an unknown check id
        CodecError: From a strict corpus stream
    """
    settings = settings if settings is not None else Settings.default()
    resolved = tuple(resolve_checks(list(checks)))
    started = time.perf_counter()
    tasks: List[ScanTask] = [
        (index, G, resolved, settings.limits, family) for index, G in enumerate(graphs)
    ]
    records = apply_pool(_scan_one, tasks, settings.harness.jobs,
                         settings.harness.progress, "scan")
    records.sort(key=lambda record: record.index)
    report = CorpusReport(list(resolved), records, str(family) if family is not None else None)
    report.skipped = getattr(graphs, "skipped", 0)
    logger.info("scan: %d graph(s), %d check(s), %d violation(s) in %.2fs",
                len(records), len(resolved), len(report.violations),
                time.perf_counter() - started)
    return report
