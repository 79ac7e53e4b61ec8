"""Working thresholds for the extraction pipelines.

Paper mode evaluates the proof bounds with known Ramsey values and gives
up on anything it cannot evaluate. Best-effort mode runs the pipeline on
whatever the graph offers.

Only a handful of Ramsey values are built in:

    R_m(1) = 1, R_m(2) = 2, R_1(k) = k    trivial
    R_2(3) = 6                            certified by ramsey certify-small

Anything else comes from an external table and is reported as such.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from ..config.settings import WitnessSettings
from ..errors import ErrorCode, RamseyTypeError, make_error

logger = logging.getLogger(__name__)

CERTIFIED: Dict[Tuple[int, int], int] = {(2, 3): 6}


class RamseyTable:
    """Lookup of multicolor Ramsey numbers R_m(k)."""

    def __init__(self, external: Optional[Dict[Tuple[int, int], int]] = None):
        self.external = dict(external or {})
        self.used_external: Set[Tuple[int, int]] = set()

    def value(self, colors: int, order: int) -> int:
        """R_colors(order).

        Raises:
            ProofStepError: E304 when the value is neither built in nor supplied
        """
        if colors < 1 or order < 1:
            raise make_error(
                ErrorCode.E004, what="Ramsey lookup", details="colors and order must be >= 1"
            )
        if order <= 2:
            return order
        if colors == 1:
            return order
        if (colors, order) in CERTIFIED:
            return CERTIFIED[(colors, order)]
        if (colors, order) in self.external:
            if (colors, order) not in self.used_external:
                logger.warning("using external Ramsey constant R_%d(%d)", colors, order)
            self.used_external.add((colors, order))
            return self.external[(colors, order)]
        raise make_error(ErrorCode.E304, colors=colors, order=order)

    def known(self, colors: int, order: int) -> bool:
        try:
            self.value(colors, order)
        except RamseyTypeError:
            return False
        return True

    def external_names(self) -> List[str]:
        return [f"R_{m}({k})" for m, k in sorted(self.used_external)]


@dataclass
class ThresholdPlan:
    """Thresholds one extraction runs against.

    The pipeline is triggered when at least `count_threshold` vertices
    have parameter value at least `param_threshold`.

    Attributes:
        mode: 'best-effort' or 'paper'
        param_threshold: 2 for the connected theorems, c_1 for the h-index ones
        count_threshold: Number of such vertices needed
        constants: Intermediate quantities of the bound (N1, N2, ...)
        missing: Why paper mode cannot evaluate the bound, if it cannot
    """
    mode: str
    param_threshold: int
    count_threshold: int
    constants: Dict[str, int] = field(default_factory=dict)
    missing: Optional[str] = None


def _deg_constants(n: int, table: RamseyTable) -> Dict[str, int]:
    # the proof closes with c = (n-1) R_2(2n-1)
    n1 = (n - 1) * table.value(2, 2 * n - 1)
    return {"N1": n1, "c": n1}


def _alpha_constants(n: int, table: RamseyTable) -> Dict[str, int]:
    n3 = table.value(2 ** 8, n + 2)
    n2 = n * table.value(2, n) * n3
    return {"N3": n3, "N2": n2, "N1": 2 * n2 - 1}


def _c_constants(n: int, table: RamseyTable) -> Dict[str, int]:
    n2 = table.value(2, n)
    return {"N2": n2, "N1": n * n2}


def _cor_deg_constants(n: int, table: RamseyTable) -> Dict[str, int]:
    return {"N1": (4 * n - 1) * table.value(2, 8 * n - 1)}


def _h_deg_constants(n: int, table: RamseyTable) -> Dict[str, int]:
    n3 = table.value(2, n)
    n2 = table.value(2 ** (n * n + 2 * n + 1), 2 * n)
    n1 = n2 * n3 + n2
    return {"N3": n3, "N2": n2, "N1": n1, "c1": n1, "c2": n2}


def _h_alpha_constants(n: int, table: RamseyTable) -> Dict[str, int]:
    return {"N2": table.value(2 ** (2 * n + 1), 2 * n)}


def _h_adh_constants(n: int, table: RamseyTable) -> Dict[str, int]:
    n2 = table.value(2, n)
    n3 = n + n2 - 1
    n1 = n2 * n3 + n2
    return {"N2": n2, "N3": n3, "N1": n1, "c1": n1, "c2": n2}


# constants the proofs use without giving a formula
_NO_FORMULA = {
    "alpha": "N_0(N1) of the path/clique/star theorem has no closed form",
    "c": "the domination bound gamma_n has no closed form",
    "adh": "the connected domination bound gamma_c(n) has no closed form",
    "cor-deg": "N_0(N1) of the path/clique/star theorem has no closed form",
    "cor-alpha": "N_0 of the path/clique/star theorem has no closed form",
    "cor-c": "the domination bound gamma_n has no closed form",
    "cor-adh": "the connected domination bound gamma_c(n) has no closed form",
    "h-alpha": "the multipartite refinement bound MR(N2, 3n) has no closed form",
    "h-c": "the multipartite refinement bound MR(N2, 3n) has no closed form",
}

_CONSTANTS = {
    "deg": _deg_constants,
    "alpha": _alpha_constants,
    "c": _c_constants,
    "cor-deg": _cor_deg_constants,
    "h-deg": _h_deg_constants,
    "h-alpha": _h_alpha_constants,
    "h-c": _h_alpha_constants,
    "h-adh": _h_adh_constants,
}


def _paper_plan(theorem_id: str, n: int, table: RamseyTable, hindex: bool) -> ThresholdPlan:
    constants: Dict[str, int] = {}
    missing: Optional[str] = None
    builder = _CONSTANTS.get(theorem_id)
    if builder is not None:
        try:
            constants = builder(n, table)
        except RamseyTypeError as e:
            missing = e.message
    if missing is None:
        missing = _NO_FORMULA.get(theorem_id)
    if missing is not None:
        return ThresholdPlan("paper", 2, 0, constants, missing)
    if hindex:
        return ThresholdPlan("paper", constants["c1"], constants["c2"], constants)
    # more than c nontrivial vertices trigger the proof
    return ThresholdPlan("paper", 2, constants["c"] + 1, constants)


def plan_thresholds(theorem_id: str, n: int, settings: WitnessSettings,
                    table: Optional[RamseyTable] = None) -> ThresholdPlan:
    """Pick the working thresholds for one extraction.

    Args:
        theorem_id: deg, alpha, c, adh, their cor- variants or an h- id
        n: Family parameter
        settings: Mode and optional count threshold override
        table: Ramsey values; built-ins only when omitted

    Returns:
        ThresholdPlan; in paper mode `missing` is set when a bound
        cannot be evaluated
    """
    hindex = theorem_id.startswith("h-")
    if settings.mode == "paper":
        plan = _paper_plan(theorem_id, n, table or RamseyTable(), hindex)
        if settings.threshold is not None and plan.missing is None:
            plan.count_threshold = settings.threshold
        return plan
    count = settings.threshold if settings.threshold is not None else 1
    # every fan needs n members, so c_1 = n
    return ThresholdPlan("best-effort", n if hindex else 2, count)
