import json
from fractions import Fraction

import numpy as np
import pytest
from conftest import random_curvature
from hypothesis import given, seed, settings
from hypothesis.strategies import floats, lists, sampled_from

from curv2k.core.exceptions import DimensionMismatchError, NotEinsteinError
from curv2k.modules.extremum import candidate_lambda_m, theta
from curv2k.modules.identities import (
    analyze,
    check_lemma32_bound,
    check_lemma_chain,
    check_norm_identity,
    check_scal_identity,
    check_sjw_sum_identity,
    check_sum_sq_identity,
    check_symmetric_space_vanishing,
    check_weyl_identity,
    compare,
    dai_fu_rhs,
    f_lambda,
    f_lambda_batch,
    f_scale,
    run_identity_suite,
    to_json_lines,
    to_table,
    verify_corpus,
    weyl_from_spectrum,
)
from curv2k.modules.model_spaces import constant_curvature, flat, product_spheres, random_einstein
from curv2k.modules.tensors import norm_sq

EIGENVALUE = floats(min_value=-3.0, max_value=3.0, allow_nan=False, allow_infinity=False, allow_subnormal=False)
EINSTEIN_CHECKS = ("scal", "norm", "sum_sq", "weyl", "sjw_sum")


def test_scal_identity_on_model_spaces(s2xs2):
    sphere = check_scal_identity(constant_curvature(5, 1.0))
    assert sphere.passed
    assert sphere.lhs == pytest.approx(20.0)

    product = check_scal_identity(s2xs2)
    assert product.passed
    assert product.lhs == pytest.approx(4.0)
    assert product.rhs == pytest.approx(4.0)

    assert check_scal_identity(flat(4)).passed


def test_norm_identity(s2xs2, sphere4):
    sphere = check_norm_identity(sphere4)
    assert sphere.passed
    assert sphere.lhs == pytest.approx(24.0)

    product = check_norm_identity(s2xs2)
    assert product.passed
    assert product.lhs == pytest.approx(8.0)
    assert analyze(s2xs2).weyl_norm_sq == pytest.approx(16.0 / 3.0)


def test_sum_sq_identity(sphere4):
    report = check_sum_sq_identity(sphere4)
    assert report.passed
    assert report.lhs == pytest.approx(9.0)
    assert report.rhs == pytest.approx(9.0)


def test_weyl_from_spectrum(sphere4, s2xs2):
    assert weyl_from_spectrum(sphere4) == pytest.approx(0.0, abs=1e-12)
    assert weyl_from_spectrum(s2xs2) == pytest.approx(16.0 / 3.0, rel=1e-12)
    assert check_weyl_identity(s2xs2).passed


def test_checks_skip_non_einstein_tensors():
    tensor = random_curvature(5, 2)
    for check in (check_scal_identity, check_norm_identity, check_sum_sq_identity, check_weyl_identity):
        report = check(tensor)
        assert report.status == "not_applicable"
        assert not report.passed
    with pytest.raises(NotEinsteinError):
        weyl_from_spectrum(tensor)


def test_sjw_sum_holds_without_einstein_condition():
    assert check_sjw_sum_identity(random_curvature(5, 3)).passed
    assert check_sjw_sum_identity(random_curvature(4, 6)).passed


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_einstein_identities_on_random_corpus(n, einstein_corpus):
    for tensor in einstein_corpus[n]:
        reports = {report.name: report for report in run_identity_suite(tensor)}
        for name in EINSTEIN_CHECKS:
            assert reports[name].passed, reports[name]


def test_symmetric_space_vanishing(sphere4, s2xs2, cp2):
    for tensor in (sphere4, s2xs2, cp2, flat(4), product_spheres(2, 3, 1.0)):
        report = check_symmetric_space_vanishing(tensor)
        assert report.passed, report
    assert dai_fu_rhs(flat(5)) == 0.0


def test_dai_fu_rhs_is_not_zero_for_generic_einstein(einstein_corpus):
    tensor = einstein_corpus[5][0]
    assert not check_symmetric_space_vanishing(tensor).passed
    assert abs(dai_fu_rhs(tensor)) > 1e-6


def test_f_vanishes_at_equality_cases():
    exact = theta(4).exact
    assert f_lambda([1] * 9, 4, exact) == 0
    assert f_lambda([Fraction(1)] * 9, 4, Fraction(1, 3)) == 0
    assert candidate_lambda_m(4, exact, 1).f_value == 0
    assert candidate_lambda_m(4, exact, 2).f_value > 0


def test_f_needs_n_values():
    with pytest.raises(DimensionMismatchError):
        f_lambda([1.0] * 8, 4, 0.1)


@seed(7)
@settings(max_examples=40, deadline=None)
@given(lists(EIGENVALUE, min_size=9, max_size=9), sampled_from([0.5, 2.0, 10.0]))
def test_f_is_symmetric_and_cubic(values, factor):
    th = theta(4).value
    base = f_lambda(values, 4, th)
    scale = 1e-6 * max(1.0, float(np.max(np.abs(values)))) ** 3
    assert f_lambda(values[::-1], 4, th) == pytest.approx(base, abs=scale)
    assert f_lambda([factor * value for value in values], 4, th) == pytest.approx(factor**3 * base, abs=scale * factor**3)


def test_f_batch_matches_scalar():
    rows = np.random.default_rng(4).normal(size=(5, 14))
    batch = f_lambda_batch(rows, 5, 0.2)
    assert np.allclose(batch, [f_lambda(row, 5, 0.2) for row in rows], rtol=1e-12, atol=1e-10)


def test_lemma_bound_is_tight_on_sphere(sphere4):
    report = check_lemma32_bound(sphere4, theta(4).value)
    assert report.passed
    assert report.lhs == pytest.approx(0.0, abs=1e-12)
    assert report.kind == "inequality"


def test_lemma_inequalities_under_the_hypothesis(mild_einstein):
    for tensor in mild_einstein:
        th = theta(tensor.n).value
        bound = check_lemma32_bound(tensor, th)
        chain = check_lemma_chain(tensor, th)
        assert bound.applicable and bound.passed, bound
        assert chain.applicable and chain.passed, chain


def test_lemma_inequalities_scale_with_the_cubic_magnitude(mild_einstein):
    sphere = constant_curvature(8, 1.0)
    chain = check_lemma_chain(sphere, theta(8).value)
    assert chain.passed
    assert chain.scale == pytest.approx(1.0)
    assert check_lemma32_bound(sphere, theta(8).value).scale == pytest.approx(1.0)

    doubled = constant_curvature(6, 2.0)
    assert check_lemma_chain(doubled, theta(6).value).scale == pytest.approx(8.0)

    for tensor in mild_einstein:
        expected = f_scale(analyze(tensor).spectrum.eigenvalues)
        chain = check_lemma_chain(tensor, theta(tensor.n).value)
        assert chain.scale == pytest.approx(expected)


def test_lemma_bound_with_zero_theta(mild_einstein):
    tensor = mild_einstein[0]
    report = check_lemma32_bound(tensor, 0.0)
    assert report.passed
    assert report.rhs == 0.0
    assert report.lhs >= 0.0


def test_lemma_checks_outside_hypothesis(s2xs2):
    bound = check_lemma32_bound(s2xs2, theta(4).value)
    chain = check_lemma_chain(s2xs2, theta(4).value)
    assert bound.status == chain.status == "not_applicable"
    assert "out of hypothesis" in bound.detail

    assert check_lemma_chain(flat(4), theta(4).value).status == "not_applicable"


def test_compare_scaling():
    exact = compare("zero", 0.0, 0.0, 1e-9)
    assert exact.passed and exact.rel_err == 0.0

    absolute = compare("tiny", 1e-12, 0.0, 1e-9)
    assert absolute.rel_err == pytest.approx(1e-12)

    relative = compare("big", 1000.5, 1000.0, 1e-3)
    assert relative.rel_err == pytest.approx(5e-4)
    assert relative.passed

    shortfall = compare("ineq", 1.0, 2.0, 1e-9, kind="inequality")
    assert shortfall.abs_err == pytest.approx(1.0)
    assert not shortfall.passed
    assert compare("ineq", 3.0, 2.0, 1e-9, kind="inequality").abs_err == 0.0


def test_report_renderings(s2xs2):
    reports = run_identity_suite(s2xs2, symmetric=True)
    lines = to_json_lines(reports).splitlines()
    assert len(lines) == len(reports)
    first = json.loads(lines[0])
    assert set(first) == {"name", "lhs", "rhs", "abs_err", "rel_err", "pass", "tolerance"}

    table = to_table(reports)
    assert table.splitlines()[0].split() == ["name", "lhs", "rhs", "abs_err", "rel_err", "pass", "tolerance"]
    assert "n/a" in table


def test_suite_ordering_and_skips():
    reports = run_identity_suite(random_einstein(4, 0), symmetric=True)
    names = [report.name for report in reports]
    assert names == [*EINSTEIN_CHECKS, "lemma32_bound", "lemma_chain", "symmetric_space_vanishing"]
    assert not reports[-1].passed


def test_verify_corpus_keeps_order():
    tensors = [random_einstein(4, 1), constant_curvature(5, 2.0), product_spheres(2, 2), random_einstein(5, 3)]
    serial = verify_corpus(tensors, workers=1)
    threaded = verify_corpus(tensors, workers=3)
    assert [[r.model_dump() for r in batch] for batch in serial] == [[r.model_dump() for r in batch] for batch in threaded]


def test_analysis_reuses_pieces(s2xs2):
    analysis = analyze(s2xs2)
    assert analyze(analysis) is analysis
    assert analysis.norm_sq == pytest.approx(norm_sq(s2xs2))
    assert analysis.spectrum is analysis.spectrum


@pytest.mark.slow
@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_einstein_identities_on_full_corpus(n):
    tensors = [random_einstein(n, index) for index in range(200)]
    for index, reports in enumerate(verify_corpus(tensors)):
        by_name = {report.name: report for report in reports}
        for name in EINSTEIN_CHECKS:
            assert by_name[name].passed, (n, index, by_name[name])
