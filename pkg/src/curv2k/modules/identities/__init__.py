from .analysis import TensorAnalysis, analyze
from .checks import (
    check_lemma32_bound,
    check_lemma_chain,
    check_norm_identity,
    check_scal_identity,
    check_sjw_sum_identity,
    check_sum_sq_identity,
    check_symmetric_space_vanishing,
    check_weyl_identity,
    dai_fu_rhs,
    dai_fu_terms,
    lemma_hypothesis,
    sjw_constant,
    weyl_from_spectrum,
)
from .objective import f_coefficients, f_lambda, f_lambda_batch, f_scale
from .report import IdentityReport, compare, not_applicable, to_json_lines, to_table
from .suite import run_identity_suite, verify_corpus

__all__ = [
    "IdentityReport",
    "TensorAnalysis",
    "analyze",
    "check_lemma32_bound",
    "check_lemma_chain",
    "check_norm_identity",
    "check_scal_identity",
    "check_sjw_sum_identity",
    "check_sum_sq_identity",
    "check_symmetric_space_vanishing",
    "check_weyl_identity",
    "compare",
    "dai_fu_rhs",
    "dai_fu_terms",
    "f_coefficients",
    "f_lambda",
    "f_lambda_batch",
    "f_scale",
    "lemma_hypothesis",
    "not_applicable",
    "run_identity_suite",
    "sjw_constant",
    "to_json_lines",
    "to_table",
    "verify_corpus",
    "weyl_from_spectrum",
]
