"""ramseytype Witnesses - Extraction Pipelines.

    report       WitnessReport and its outcomes
    thresholds   working thresholds and the Ramsey value table
    pipeline     shared pipeline machinery
    connected    deg, alpha, c, adh and their corollaries
    hindex       h-deg, h-alpha, h-c, h-adh
    necessity    the measured necessity tables
    registry     theorem id -> pipeline
"""

from .connected import extract_witness
from .hindex import extract_hindex_witness
from .necessity import NECESSITY_IDS, NecessityReport, only_if_certify
from .registry import WITNESS_IDS, run_witness
from .report import Found, NotTriggered, StepFailed, TraceStep, WitnessReport
from .thresholds import RamseyTable, ThresholdPlan, plan_thresholds

__all__ = [
    "Found",
    "NECESSITY_IDS",
    "NecessityReport",
    "NotTriggered",
    "RamseyTable",
    "StepFailed",
    "ThresholdPlan",
    "TraceStep",
    "WITNESS_IDS",
    "WitnessReport",
    "extract_hindex_witness",
    "extract_witness",
    "only_if_certify",
    "plan_thresholds",
    "run_witness",
]
