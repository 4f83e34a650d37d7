"""
✅ POINTWISE IDENTITY CHECKS - Each Einstein identity as a report

WHAT IS CHECKED (all for Einstein tensors, lambda = spectrum of R-ring, mean = lambda-bar):
📏 scal           Scal = n(n-1) mean
📐 norm           |R|^2 = |W|^2 + 2n(n-1) mean^2
🔢 sum_sq         sum lambda^2 = (3/4)|R|^2 - (n-1)^2 mean^2
🌊 weyl           |W|^2 = (4/3) sum lambda^2 - (2/3)(n-1)(n+2) mean^2
✳️ sjw_sum        sum_j |S^j W|^2 = 2(n^2+n-8)/n |W|^2 (any tensor, n >= 3)
⚖️ lemma32_bound  sum_j lambda_j |S^j W|^2 >= lower bound in theta (needs lambda_1 >= -theta mean, mean > 0)
⛓️ lemma_chain    dai_fu_rhs >= (16/3n) f(lambda) (same hypothesis)
🌀 symmetric_space_vanishing  dai_fu_rhs = 0 (only meaningful for symmetric spaces)

Inputs outside a check's hypothesis yield a not_applicable report, never a failure.
"""

from __future__ import annotations

from curv2k.core.exceptions import NotEinsteinError
from curv2k.modules.identities.analysis import TensorAnalysis, analyze
from curv2k.modules.identities.objective import f_lambda, f_scale
from curv2k.modules.identities.report import IdentityReport, compare, not_applicable
from curv2k.modules.tensors.curvature_tensor import CurvatureTensor
from curv2k.settings import settings

Tensorish = CurvatureTensor | TensorAnalysis


def _tolerance(tolerance: float | None) -> float:
    return settings.IDENTITY_TOLERANCE if tolerance is None else tolerance


def _not_einstein(analysis: TensorAnalysis) -> str:
    return f"not Einstein (||Ric0|| / ||Ric|| = {analysis.einstein_defect:.3e})"


def _require_einstein(analysis: TensorAnalysis) -> None:
    if not analysis.is_einstein():
        raise NotEinsteinError(f"Identity stated for Einstein tensors only: {_not_einstein(analysis)}")


def check_scal_identity(tensor: Tensorish, tolerance: float | None = None) -> IdentityReport:
    analysis, tolerance = analyze(tensor), _tolerance(tolerance)
    if not analysis.is_einstein():
        return not_applicable("scal", tolerance, _not_einstein(analysis))
    n, spec = analysis.n, analysis.spectrum
    return compare(
        "scal",
        analysis.tensor.scalar(),
        n * (n - 1) * spec.mean,
        tolerance,
        scale=n * (n - 1) * spec.rms(),
    )


def check_norm_identity(tensor: Tensorish, tolerance: float | None = None) -> IdentityReport:
    analysis, tolerance = analyze(tensor), _tolerance(tolerance)
    if not analysis.is_einstein():
        return not_applicable("norm", tolerance, _not_einstein(analysis))
    n, mean = analysis.n, analysis.spectrum.mean
    return compare(
        "norm",
        analysis.norm_sq,
        analysis.weyl_norm_sq + 2 * n * (n - 1) * mean**2,
        tolerance,
        scale=analysis.norm_sq,
    )


def check_sum_sq_identity(tensor: Tensorish, tolerance: float | None = None) -> IdentityReport:
    analysis, tolerance = analyze(tensor), _tolerance(tolerance)
    if not analysis.is_einstein():
        return not_applicable("sum_sq", tolerance, _not_einstein(analysis))
    n, spec = analysis.n, analysis.spectrum
    return compare(
        "sum_sq",
        spec.sum_sq(),
        0.75 * analysis.norm_sq - (n - 1) ** 2 * spec.mean**2,
        tolerance,
        scale=max(spec.sum_sq(), 0.75 * analysis.norm_sq),
    )


def weyl_from_spectrum(tensor: Tensorish) -> float:
    """|W|^2 recovered from the spectrum alone; Einstein tensors only."""
    analysis = analyze(tensor)
    _require_einstein(analysis)
    n, spec = analysis.n, analysis.spectrum
    return 4.0 / 3.0 * spec.sum_sq() - 2.0 / 3.0 * (n - 1) * (n + 2) * spec.mean**2


def check_weyl_identity(tensor: Tensorish, tolerance: float | None = None) -> IdentityReport:
    analysis, tolerance = analyze(tensor), _tolerance(tolerance)
    if not analysis.is_einstein():
        return not_applicable("weyl", tolerance, _not_einstein(analysis))
    return compare(
        "weyl",
        analysis.weyl_norm_sq,
        weyl_from_spectrum(analysis),
        tolerance,
        scale=4.0 / 3.0 * analysis.spectrum.sum_sq(),
    )


def sjw_constant(n: int) -> float:
    """2(n^2 + n - 8) / n."""
    return 2.0 * (n * n + n - 8) / n


def check_sjw_sum_identity(tensor: Tensorish, tolerance: float | None = None) -> IdentityReport:
    analysis, tolerance = analyze(tensor), _tolerance(tolerance)
    n = analysis.n
    if n < 3:
        return not_applicable("sjw_sum", tolerance, f"Weyl tensor needs n >= 3, got n = {n}")
    constant = sjw_constant(n)
    return compare(
        "sjw_sum",
        analysis.sjw_total,
        constant * analysis.weyl_norm_sq,
        tolerance,
        scale=abs(constant) * analysis.norm_sq,
    )


def dai_fu_terms(tensor: Tensorish) -> tuple[float, float, float, float]:
    """The four summands of dai_fu_rhs, in order."""
    analysis = analyze(tensor)
    _require_einstein(analysis)
    n, spec = analysis.n, analysis.spectrum
    mean = spec.mean
    return (
        analysis.sjw_weighted,
        8.0 * (n - 1) / (3.0 * n) * (-(n**3) + 6 * n**2 + 12 * n - 8) * mean**3,
        8.0 * (2 * n**2 - 22 * n + 8) / (3.0 * n) * mean * spec.sum_sq(),
        16.0 * spec.sum_cube(),
    )


def dai_fu_rhs(tensor: Tensorish) -> float:
    """Algebraic value of 3<Delta R, R> on an Einstein manifold (Scal already in terms of mean)."""
    return float(sum(dai_fu_terms(tensor)))


def check_symmetric_space_vanishing(tensor: Tensorish, tolerance: float | None = None) -> IdentityReport:
    analysis, tolerance = analyze(tensor), _tolerance(tolerance)
    if not analysis.is_einstein():
        return not_applicable("symmetric_space_vanishing", tolerance, _not_einstein(analysis))
    terms = dai_fu_terms(analysis)
    return compare(
        "symmetric_space_vanishing",
        sum(terms),
        0.0,
        tolerance,
        scale=sum(abs(term) for term in terms),
    )


def lemma_hypothesis(analysis: TensorAnalysis, theta: float) -> str | None:
    """Reason the lower-bound hypothesis fails, or None when it holds."""
    if not analysis.is_einstein():
        return _not_einstein(analysis)
    spec = analysis.spectrum
    if spec.is_flat_like() or spec.mean <= 0.0:
        return f"out of hypothesis: mean = {spec.mean:.6g} is not positive"
    slack = settings.FLOAT_TOLERANCE * max(abs(spec.mean), spec.rms())
    if spec.minimum < -theta * spec.mean - slack:
        return f"out of hypothesis: lambda_1 = {spec.minimum:.6g} < -theta * mean = {-theta * spec.mean:.6g}"
    return None


def check_lemma32_bound(tensor: Tensorish, theta: float, tolerance: float | None = None) -> IdentityReport:
    analysis, tolerance = analyze(tensor), _tolerance(tolerance)
    theta = float(theta)
    reason = lemma_hypothesis(analysis, theta)
    if reason is not None:
        return not_applicable("lemma32_bound", tolerance, reason, kind="inequality")

    n, spec = analysis.n, analysis.spectrum
    c = n * n + n - 8
    first = -8.0 * c / (3.0 * n) * theta * spec.mean * spec.sum_sq()
    second = 4.0 * c * (n - 1) * (n + 2) / (3.0 * n) * theta * spec.mean**3
    lhs = analysis.sjw_weighted
    return compare(
        "lemma32_bound",
        lhs,
        first + second,
        tolerance,
        scale=f_scale(spec.eigenvalues),
        kind="inequality",
        detail=f"slack {lhs - first - second:.6g}",
    )


def check_lemma_chain(tensor: Tensorish, theta: float, tolerance: float | None = None) -> IdentityReport:
    analysis, tolerance = analyze(tensor), _tolerance(tolerance)
    theta = float(theta)
    reason = lemma_hypothesis(analysis, theta)
    if reason is not None:
        return not_applicable("lemma_chain", tolerance, reason, kind="inequality")

    n = analysis.n
    terms = dai_fu_terms(analysis)
    lhs = float(sum(terms))
    rhs = 16.0 / (3.0 * n) * f_lambda(analysis.spectrum, n, theta)
    return compare(
        "lemma_chain",
        lhs,
        rhs,
        tolerance,
        scale=f_scale(analysis.spectrum.eigenvalues),
        kind="inequality",
        detail=f"slack {lhs - rhs:.6g}",
    )
