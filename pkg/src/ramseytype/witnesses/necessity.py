"""The necessity direction, measured.

Every characterization comes with a table: at a suitable n each family
member has more nontrivial vertices than the bound allows, so no bounded
class can avoid forbidding it. only_if_certify builds the members at
that n and measures the counts.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..config.settings import SearchLimits
from ..errors import ErrorCode, make_error, unknown_theorem_error
from ..generators import theorem_family
from ..params import ParamKind, nontrivial_count

logger = logging.getLogger(__name__)

_KINDS = {
    "deg": ParamKind.DEGREE,
    "alpha": ParamKind.LOCAL_INDEPENDENCE,
    "c": ParamKind.LOCAL_COMPONENTS,
    "adh": ParamKind.ADHESION,
}

# theorem id -> (parameter, offset added to c for the family size)
SINGLE_BOUND = {
    "deg": ("deg", 3),
    "alpha": ("alpha", 3),
    "c": ("c", 3),
    "adh": ("adh", 3),
    "cor-deg": ("deg", 1),
    "cor-alpha": ("alpha", 1),
    "cor-c": ("c", 1),
    "cor-adh": ("adh", 1),
}

TWO_BOUNDS = {
    "h-deg": "deg",
    "h-alpha": "alpha",
    "h-c": "c",
    "h-adh": "adh",
}

NECESSITY_IDS = tuple(SINGLE_BOUND) + tuple(TWO_BOUNDS) + ("maxdeg",)


@dataclass
class NecessityRow:
    member: str
    count: int
    exceeds: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"member": self.member, "count": self.count, "exceeds": self.exceeds}


@dataclass
class NecessityReport:
    """Measured counts of one family at the substituted n.

    Attributes:
        theorem_id: Which characterization
        n: Family parameter the bound was substituted into
        bound: Human-readable form of the violated bound
        rows: One row per member, in statement order
    """
    theorem_id: str
    n: int
    bound: str
    rows: List[NecessityRow] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(row.exceeds for row in self.rows)

    @property
    def counts(self) -> List[int]:
        return [row.count for row in self.rows]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theorem": self.theorem_id,
            "n": self.n,
            "bound": self.bound,
            "holds": self.holds,
            "rows": [row.to_dict() for row in self.rows],
        }


def _positive(what: str, value: Optional[int]) -> int:
    if value is None or value < 1:
        raise make_error(
            ErrorCode.E004, what="necessity", details=f"{what} must be a positive integer"
        )
    return value


def only_if_certify(theorem_id: str, c: Optional[int] = None, c1: Optional[int] = None,
                    c2: Optional[int] = None,
                    limits: Optional[SearchLimits] = None) -> NecessityReport:
    """Measure a family at the n where every member breaks the bound.

    Connected theorems use n = c + 3 and count vertices of parameter at
    least 2 against "at most c". The corollaries use n = c + 1, never
    below 3, so that K_n has vertices of degree 2. The h-index theorems
    use n = c1 + c2 and count vertices of parameter at least c1 against
    "fewer than c2"; maxdeg uses n = c + 2 and the maximum degree.

    Args:
        theorem_id: One of NECESSITY_IDS
        c: The bound, for single-bound theorems
        c1: Parameter threshold, for h-index theorems
        c2: Count bound, for h-index theorems

    Returns:
        NecessityReport; `holds` is False when some member stays within
        the bound
    """
    if theorem_id in SINGLE_BOUND:
        bound = _positive("c", c)
        param, offset = SINGLE_BOUND[theorem_id]
        n = max(bound + offset, 3)
        kind = _KINDS[param]
        rows = []
        for member in theorem_family(theorem_id, n).members:
            count = nontrivial_count(member.graph, kind, 2, limits)
            rows.append(NecessityRow(str(member.name), count, count > bound))
        report = NecessityReport(theorem_id, n, f"#{{{param} >= 2}} <= {bound}", rows)
    elif theorem_id in TWO_BOUNDS:
        first = _positive("c1", c1)
        second = _positive("c2", c2)
        param = TWO_BOUNDS[theorem_id]
        n = first + second
        kind = _KINDS[param]
        rows = []
        for member in theorem_family(theorem_id, n).members:
            count = nontrivial_count(member.graph, kind, first, limits)
            rows.append(NecessityRow(str(member.name), count, count >= second))
        report = NecessityReport(theorem_id, n, f"#{{{param} >= {first}}} < {second}", rows)
    elif theorem_id == "maxdeg":
        bound = _positive("c", c)
        n = bound + 2
        rows = []
        for member in theorem_family(theorem_id, n).members:
            top = max(member.graph.degrees(), default=0)
            rows.append(NecessityRow(str(member.name), top, top > bound))
        report = NecessityReport(theorem_id, n, f"max degree <= {bound}", rows)
    else:
        raise unknown_theorem_error(theorem_id, ", ".join(NECESSITY_IDS))
    logger.info("necessity %s at n=%d: %s", theorem_id, report.n, report.counts)
    return report
