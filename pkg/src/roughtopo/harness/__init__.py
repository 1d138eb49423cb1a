"""Exhaustive and sampled verification of the proposition catalog."""

from .batch import EXHAUSTIVE_MAX_N, RelationBatch, enumerate_relations
from .catalog import BY_ID, CATALOG, Proposition
from .sweep import (
    PropositionReport,
    SweepConfig,
    check_proposition,
    find_counterexamples,
    replay,
    reports_to_json,
    run_suite,
)

__all__ = [
    "BY_ID",
    "CATALOG",
    "EXHAUSTIVE_MAX_N",
    "Proposition",
    "PropositionReport",
    "RelationBatch",
    "SweepConfig",
    "check_proposition",
    "enumerate_relations",
    "find_counterexamples",
    "replay",
    "reports_to_json",
    "run_suite",
]
