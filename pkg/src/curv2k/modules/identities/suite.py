from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from curv2k.modules.extremum.threshold import theta as threshold
from curv2k.modules.identities.analysis import TensorAnalysis, analyze
from curv2k.modules.identities.checks import (
    check_lemma32_bound,
    check_lemma_chain,
    check_norm_identity,
    check_scal_identity,
    check_sjw_sum_identity,
    check_sum_sq_identity,
    check_symmetric_space_vanishing,
    check_weyl_identity,
)
from curv2k.modules.identities.report import IdentityReport, not_applicable
from curv2k.modules.tensors.curvature_tensor import CurvatureTensor
from curv2k.settings import settings

logger = logging.getLogger(__name__)


def run_identity_suite(
    tensor: CurvatureTensor | TensorAnalysis,
    theta: float | None = None,
    *,
    symmetric: bool = False,
    tolerance: float | None = None,
) -> list[IdentityReport]:
    """
    🧪 RUN EVERY POINTWISE CHECK ON ONE TENSOR

    Args:
        tensor: the curvature tensor (or an existing analysis of it)
        theta: threshold for the two lemma inequalities; defaults to theta(n) for n >= 4
        symmetric: also require dai_fu_rhs = 0, for tensors of symmetric spaces
        tolerance: relative tolerance; defaults to settings.IDENTITY_TOLERANCE

    Returns:
        Reports in a fixed order; not-applicable ones are included
    """
    analysis = analyze(tensor)
    tolerance = settings.IDENTITY_TOLERANCE if tolerance is None else tolerance

    reports = [
        check_scal_identity(analysis, tolerance),
        check_norm_identity(analysis, tolerance),
        check_sum_sq_identity(analysis, tolerance),
        check_weyl_identity(analysis, tolerance),
        check_sjw_sum_identity(analysis, tolerance),
    ]

    if theta is None and analysis.n < 4:
        reason = f"theta(n) needs n >= 4, got n = {analysis.n}"
        reports.append(not_applicable("lemma32_bound", tolerance, reason, kind="inequality"))
        reports.append(not_applicable("lemma_chain", tolerance, reason, kind="inequality"))
    else:
        theta = threshold(analysis.n).value if theta is None else float(theta)
        reports.append(check_lemma32_bound(analysis, theta, tolerance))
        reports.append(check_lemma_chain(analysis, theta, tolerance))

    if symmetric:
        reports.append(check_symmetric_space_vanishing(analysis, tolerance))

    for report in reports:
        if not report.applicable:
            logger.info(f"Skipped {report.name}: {report.detail}")
        elif not report.passed:
            logger.warning(f"{report.name} failed: rel_err {report.rel_err:.3e} > {report.tolerance:.1e}")
    return reports


def verify_corpus(
    tensors: Sequence[CurvatureTensor],
    theta: float | None = None,
    *,
    symmetric: Sequence[bool] | None = None,
    workers: int = 1,
    tolerance: float | None = None,
) -> list[list[IdentityReport]]:
    """Run the suite on every tensor; results follow input order whatever the worker count."""
    flags = [False] * len(tensors) if symmetric is None else list(symmetric)

    def _verify(index: int) -> list[IdentityReport]:
        return run_identity_suite(tensors[index], theta, symmetric=flags[index], tolerance=tolerance)

    if workers <= 1:
        return [_verify(index) for index in range(len(tensors))]

    logger.info(f"Verifying {len(tensors)} tensors on {workers} threads")
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(_verify, range(len(tensors))))
