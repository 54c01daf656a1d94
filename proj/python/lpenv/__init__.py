"""Sharp L^p triangle-inequality envelopes."""

from ._lpenv import (
    StepFunction,
    bound_report,
    carlen_bound,
    empirical_B,
    eval_F,
    eval_G,
    extremal,
    lower_envelope,
    oracle_envelope,
    regime,
    scalar_three_term,
    sum_power_norm,
    torsion,
    torsion_sign_changes,
    triple_of_pair,
    triple_report,
    two_point,
    upper_envelope,
    verify_analysis,
    verify_pairs,
    verify_sums,
)

__all__ = [
    "StepFunction",
    "bound_report",
    "carlen_bound",
    "empirical_B",
    "eval_F",
    "eval_G",
    "extremal",
    "lower_envelope",
    "oracle_envelope",
    "regime",
    "scalar_three_term",
    "sum_power_norm",
    "torsion",
    "torsion_sign_changes",
    "triple_of_pair",
    "triple_report",
    "two_point",
    "upper_envelope",
    "verify_analysis",
    "verify_pairs",
    "verify_sums",
]
