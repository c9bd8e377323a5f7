"""Affine Lambda-building models: atlases, axiom deciders, retractions."""

from ._core import (
    Atlas,
    AxiomFailure,
    AxiomReport,
    MalformedInput,
    TheoremViolation,
    broken_pair,
    check_axioms,
    distance,
    equivalence_suite,
    exit_code,
    fan,
    format_reports,
    infinity_report,
    lambda_tree,
    load_model,
    longest_length,
    metric,
    parse_model,
    positive_root_count,
    pruned_fan,
    retract,
    run_cli,
    shifted_rays,
    single_apartment,
    weyl_order,
)

__all__ = [
    "Atlas",
    "AxiomFailure",
    "AxiomReport",
    "MalformedInput",
    "TheoremViolation",
    "broken_pair",
    "check_axioms",
    "distance",
    "equivalence_suite",
    "exit_code",
    "fan",
    "format_reports",
    "infinity_report",
    "lambda_tree",
    "load_model",
    "longest_length",
    "metric",
    "parse_model",
    "positive_root_count",
    "pruned_fan",
    "retract",
    "run_cli",
    "shifted_rays",
    "single_apartment",
    "weyl_order",
]
