"""Witness Pipeline Registry.

Maps every theorem id the CLI accepts to the function that extracts a
witness for it. The corollary ids run the connected pipelines with
connected=False.
"""

from typing import Any, Callable, Dict, Optional

from ..config.settings import Settings
from ..errors import ErrorCode, make_error, unknown_theorem_error
from ..graph import Graph, component_count
from .connected import extract_witness
from .hindex import extract_hindex_witness
from .report import WitnessReport
from .thresholds import RamseyTable

Extractor = Callable[..., WitnessReport]


def _connected(base: str) -> Extractor:
    def run(G: Graph, n: int, connected: bool = True, **kwargs: Any) -> WitnessReport:
        return extract_witness(G, base, n, connected=connected, **kwargs)
    return run


def _corollary(base: str) -> Extractor:
    def run(G: Graph, n: int, connected: bool = False, **kwargs: Any) -> WitnessReport:
        return extract_witness(G, base, n, connected=False, **kwargs)
    return run


def _hindex(theorem_id: str) -> Extractor:
    def run(G: Graph, n: int, connected: bool = False, **kwargs: Any) -> WitnessReport:
        return extract_hindex_witness(G, theorem_id, n, **kwargs)
    return run


WITNESS_PIPELINES: Dict[str, Dict[str, Any]] = {
    # Connected graphs with many nontrivial vertices
    "deg": {"function": _connected("deg"), "needs_connected": True},
    "alpha": {"function": _connected("alpha"), "needs_connected": True},
    "c": {"function": _connected("c"), "needs_connected": True},
    "adh": {"function": _connected("adh"), "needs_connected": True},
    # Any graph, corollary families
    "cor-deg": {"function": _corollary("deg"), "needs_connected": False},
    "cor-alpha": {"function": _corollary("alpha"), "needs_connected": False},
    "cor-c": {"function": _corollary("c"), "needs_connected": False},
    "cor-adh": {"function": _corollary("adh"), "needs_connected": False},
    # Many vertices of large parameter
    "h-deg": {"function": _hindex("h-deg"), "needs_connected": False},
    "h-alpha": {"function": _hindex("h-alpha"), "needs_connected": False},
    "h-c": {"function": _hindex("h-c"), "needs_connected": False},
    "h-adh": {"function": _hindex("h-adh"), "needs_connected": False},
}

WITNESS_IDS = tuple(WITNESS_PIPELINES)


def is_witness_theorem(theorem_id: str) -> bool:
    return theorem_id in WITNESS_PIPELINES


def run_witness(G: Graph, theorem_id: str, n: int, connected: bool = True,
                settings: Optional[Settings] = None,
                table: Optional[RamseyTable] = None) -> WitnessReport:
    """Dispatch to the pipeline registered for theorem_id.

    Raises:
        ProofStepError: E302 for an unknown theorem id
        SearchLimitError: E203 when a connected theorem gets a
            disconnected graph and connected is set
    """
    entry = WITNESS_PIPELINES.get(theorem_id)
    if entry is None:
        raise unknown_theorem_error(theorem_id, ", ".join(WITNESS_IDS))
    if entry["needs_connected"] and connected:
        count = component_count(G)
        if count > 1:
            raise make_error(ErrorCode.E203, what=f"witness {theorem_id}", components=count)
    extractor: Extractor = entry["function"]
    return extractor(G, n, connected=connected, settings=settings, table=table)
