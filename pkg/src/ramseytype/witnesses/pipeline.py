"""Shared machinery of the extraction pipelines.

A pipeline checks the nontrivial count against its working threshold,
runs the proof's case analysis, and certifies every member it claims by
an induced search inside the small vertex set the construction produced.
"""

import logging
from typing import Callable, Iterable, List, Optional

from ..config.settings import Settings
from ..errors import ErrorCode, SearchLimitError, make_error
from ..generators import FamilySpec, GraphName, named_graph, theorem_family
from ..graph import Graph, bits, induced, mask_of
from ..isomorphism import find_induced, is_family_free, verify_embedding
from ..params import ParamKind, nontrivial_count
from .report import VIA_FALLBACK, Found, NotTriggered, Outcome, StepFailed, TraceStep, WitnessReport
from .thresholds import RamseyTable, ThresholdPlan, plan_thresholds

logger = logging.getLogger(__name__)

Attempt = Callable[[], Optional[Found]]


class Shortage(Exception):
    """A proof step found less than it needs; ends one case of the analysis."""

    def __init__(self, step: str, diagnostic: str):
        super().__init__(f"{step}: {diagnostic}")
        self.step = step
        self.diagnostic = diagnostic


class Pipeline:
    """Base class; subclasses implement extract()."""

    kind: ParamKind = ParamKind.DEGREE

    def __init__(self, G: Graph, theorem_id: str, n: int,
                 settings: Optional[Settings] = None,
                 table: Optional[RamseyTable] = None):
        if n < 2:
            raise make_error(ErrorCode.E004, what=f"witness {theorem_id}", details="n must be >= 2")
        self.G = G
        self.theorem_id = theorem_id
        self.n = n
        self.settings = settings if settings is not None else Settings.default()
        self.limits = self.settings.limits
        self.table = table if table is not None else RamseyTable()
        self.family: FamilySpec = theorem_family(theorem_id, n)
        self.trace: List[TraceStep] = []
        self.plan: Optional[ThresholdPlan] = None

    def note(self, step: str, sizes: Iterable[int], note: str = "") -> None:
        self.trace.append(TraceStep(step, list(sizes), note))
        logger.debug("%s n=%d %s %s %s", self.theorem_id, self.n, step, list(sizes), note)

    def capped(self, mask: int) -> int:
        """The lowest exact_cap vertices of mask."""
        kept = 0
        for count, v in enumerate(bits(mask)):
            if count == self.limits.exact_cap:
                break
            kept |= 1 << v
        return kept

    def certify(self, name: GraphName, vertices: Iterable[int],
                host: Optional[Graph] = None) -> Optional[Found]:
        """Look for member `name` inside G[vertices].

        Returns:
            Found with an embedding into the pipeline's graph (or host),
            None when the set does not contain the member
        """
        graph = host if host is not None else self.G
        if name not in [m.name for m in self.family.members]:
            raise make_error(
                ErrorCode.E004, what="witness", details=f"{name} is not in {self.family}"
            )
        H = named_graph(name)
        mask = mask_of(vertices)
        if mask.bit_count() < H.order:
            return None
        sub, mapping = induced(graph, mask)
        embedding = find_induced(sub, H, self.limits)
        if embedding is None:
            return None
        embedding = embedding.compose(mapping)
        if not verify_embedding(graph, H, embedding):
            raise make_error(ErrorCode.E004, what="witness", details=f"{name} failed to verify")
        self.note("certify", [mask.bit_count()], str(name))
        return Found(name, embedding)

    def extract(self) -> Outcome:
        raise NotImplementedError

    def fallback(self) -> Optional[Found]:
        """Complete search for any family member, in member order."""
        try:
            verdict = is_family_free(self.G, self.family, self.limits)
        except SearchLimitError as e:
            self.note("fallback", [self.G.order], e.message)
            return None
        self.note("fallback", [self.G.order], "free" if verdict.free else str(verdict.member))
        if verdict.free or verdict.member_index is None or verdict.embedding is None:
            return None
        member = self.family.members[verdict.member_index]
        return Found(member.name, verdict.embedding, VIA_FALLBACK)

    def report(self, connected: bool = True) -> WitnessReport:
        self.plan = plan_thresholds(self.theorem_id, self.n, self.settings.witness, self.table)
        outcome = self._run(self.plan)
        settled = isinstance(outcome, (Found, NotTriggered))
        if not settled and self.settings.witness.fallback_enabled:
            found = self.fallback()
            if found is not None:
                outcome = found
        return WitnessReport(
            theorem_id=self.theorem_id,
            n=self.n,
            mode=self.plan.mode,
            outcome=outcome,
            trace=self.trace,
            connected=connected,
            constants=dict(self.plan.constants),
            external=self.table.external_names(),
        )

    def _run(self, plan: ThresholdPlan) -> Outcome:
        if plan.missing is not None:
            self.note("threshold", [], plan.missing)
            return StepFailed("threshold", plan.missing)
        try:
            count = nontrivial_count(self.G, self.kind, plan.param_threshold, self.limits)
        except SearchLimitError as e:
            return StepFailed("count", e.message)
        rule = f"{self.kind.value} >= {plan.param_threshold}"
        self.note("count", [count, plan.count_threshold], rule)
        if count < plan.count_threshold:
            return NotTriggered(count, plan.count_threshold)
        try:
            return self.extract()
        except Shortage as e:
            return StepFailed(e.step, e.diagnostic)
        except SearchLimitError as e:
            return StepFailed("search", e.message)

    def first_of(self, attempts: List[Attempt]) -> Outcome:
        """Run alternative cases in order; the last shortage is reported."""
        last = StepFailed("extract", "no case applied")
        for attempt in attempts:
            try:
                found = attempt()
            except Shortage as e:
                self.note(e.step, [], e.diagnostic)
                last = StepFailed(e.step, e.diagnostic)
                continue
            if found is not None:
                return found
        return last
