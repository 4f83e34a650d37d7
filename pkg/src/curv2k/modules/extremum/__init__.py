from .candidates import (
    CandidateCertificate,
    CandidatePayload,
    CandidatePoint,
    candidate_lambda_m,
    certify_candidates,
    degenerate_split_theta,
    f_lambda_m_closed_form,
    lagrange_candidates,
    quadratic_coefficient,
    shift_constant,
    shifted_objective,
    shifted_sums,
    split_point,
)
from .oracle import ExtremumReport, SimplexOracle, brute_force_min
from .sharpness import SharpnessWitness, WitnessPayload, classify_equality, sharpness_witness
from .threshold import ConditionReport, Threshold, ThresholdPayload, check_condition, format_fraction, theta

__all__ = [
    "CandidateCertificate",
    "CandidatePayload",
    "CandidatePoint",
    "ConditionReport",
    "ExtremumReport",
    "SharpnessWitness",
    "SimplexOracle",
    "Threshold",
    "ThresholdPayload",
    "WitnessPayload",
    "brute_force_min",
    "candidate_lambda_m",
    "certify_candidates",
    "check_condition",
    "classify_equality",
    "degenerate_split_theta",
    "f_lambda_m_closed_form",
    "format_fraction",
    "lagrange_candidates",
    "quadratic_coefficient",
    "shift_constant",
    "shifted_objective",
    "shifted_sums",
    "sharpness_witness",
    "split_point",
    "theta",
]
