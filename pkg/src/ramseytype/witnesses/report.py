"""Witness reports.

A report records what a pipeline was asked, what it measured on the way
and how it ended: a verified family member, a count below the working
threshold, or the step that ran out of room.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Union

from ..generators import GraphName
from ..isomorphism import Embedding

VIA_CONSTRUCTION = "construction"
VIA_FALLBACK = "fallback"


@dataclass
class TraceStep:
    """One proof step and the sizes it saw."""
    step: str
    sizes: List[int] = field(default_factory=list)
    note: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"step": self.step, "sizes": list(self.sizes), "note": self.note}


@dataclass
class Found:
    """A verified induced copy of a family member.

    Attributes:
        member: Name of the member
        embedding: mapping[i] is the host vertex of member vertex i
        via: 'construction' when the proof steps produced it,
            'fallback' when the exhaustive family search did
    """
    member: GraphName
    embedding: Embedding
    via: str = VIA_CONSTRUCTION

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "found",
            "member": str(self.member),
            "embedding": list(self.embedding.mapping),
            "via": self.via,
        }


@dataclass
class NotTriggered:
    """The nontrivial count is below the working threshold."""
    count: int
    threshold: int

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "not-triggered", "count": self.count, "threshold": self.threshold}


@dataclass
class StepFailed:
    """A proof step had too little supply at this scale."""
    step: str
    diagnostic: str

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "step-failed", "step": self.step, "diagnostic": self.diagnostic}


Outcome = Union[Found, NotTriggered, StepFailed]


@dataclass
class WitnessReport:
    """Result of one extraction run."""
    theorem_id: str
    n: int
    mode: str
    outcome: Outcome
    trace: List[TraceStep] = field(default_factory=list)
    connected: bool = True
    constants: Dict[str, int] = field(default_factory=dict)
    external: List[str] = field(default_factory=list)

    @property
    def found(self) -> Optional[Found]:
        return self.outcome if isinstance(self.outcome, Found) else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theorem": self.theorem_id,
            "n": self.n,
            "mode": self.mode,
            "connected": self.connected,
            "outcome": self.outcome.to_dict(),
            "trace": [step.to_dict() for step in self.trace],
            "constants": dict(self.constants),
            "external": list(self.external),
        }
