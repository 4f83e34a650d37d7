import numpy as np
import pytest
from conftest import random_orthogonal
from hypothesis import given, seed, settings
from hypothesis.extra.numpy import arrays
from hypothesis.strategies import floats

from curv2k.core.exceptions import (
    ConvergenceError,
    DegenerateEigenspaceError,
    DimensionMismatchError,
    InvalidDimensionError,
)
from curv2k.modules.model_spaces import constant_curvature, random_einstein
from curv2k.modules.second_kind import (
    JacobiEigensolver,
    Spectrum,
    jacobi_eigh,
    rbar_apply,
    rotation_rounds,
    s_action,
    second_kind_matrix,
    sjw_norms,
    spectrum,
    traceless_basis,
    traceless_dimension,
    weighted_weyl_sum,
    weyl_gram,
)
from curv2k.modules.tensors import CurvatureTensor, SymTensor, decompose, inner_product, metric_square, norm_sq

SIZE = 9
ELEMENTS = floats(min_value=-5.0, max_value=5.0, allow_nan=False, allow_infinity=False)


@pytest.mark.parametrize("n, expected", [(2, 2), (3, 5), (4, 9), (5, 14), (8, 35)])
def test_traceless_dimension(n, expected):
    assert traceless_dimension(n) == expected
    assert len(traceless_basis(n)) == expected


@pytest.mark.parametrize("n", [3, 4, 6])
def test_traceless_basis_is_orthonormal(n):
    basis = traceless_basis(n)
    assert np.allclose(basis.gram(), np.eye(basis.N), rtol=0.0, atol=1e-14)
    assert all(abs(element.trace()) < 1e-14 for element in basis.elements)


def test_traceless_basis_needs_two_dimensions():
    with pytest.raises(InvalidDimensionError):
        traceless_basis(1)


def test_rbar_on_constant_curvature():
    kappa, n = 1.5, 4
    tensor = constant_curvature(n, kappa)
    phi = SymTensor(np.diag([1.0, -1.0, 2.0, -2.0]))
    assert rbar_apply(tensor, phi).allclose(phi * kappa)

    g = SymTensor.metric(n)
    assert rbar_apply(tensor, g).allclose(g * (kappa * (1 - n)))
    assert rbar_apply(CurvatureTensor.zeros(n), phi).allclose(SymTensor.zeros(n))


def test_second_kind_matrix_of_unit_sphere(sphere4):
    op = second_kind_matrix(sphere4)
    assert np.allclose(op.matrix, np.eye(9), rtol=0.0, atol=1e-14)
    assert np.isclose(op.trace(), 9.0)
    assert op.trace_check()


def test_second_kind_matrix_of_product(s2xs2):
    op = second_kind_matrix(s2xs2)
    assert np.isclose(op.trace(), 3.0)
    assert op.trace_check()


def test_operator_apply_matches_rbar(einstein_corpus):
    tensor = einstein_corpus[5][0]
    op = second_kind_matrix(tensor)
    phi = op.basis.combine(np.arange(op.N, dtype=float))
    assert op.apply(phi).allclose(rbar_apply(tensor, phi).traceless(), atol=1e-12)


def test_spectrum_of_sphere_and_flat(sphere4):
    spec = spectrum(second_kind_matrix(sphere4))
    assert np.allclose(spec.eigenvalues, 1.0, rtol=0.0, atol=1e-13)
    assert np.isclose(spec.mean, 1.0)
    assert spec.trace_ok

    zero = spectrum(second_kind_matrix(CurvatureTensor.zeros(4)))
    assert np.all(zero.eigenvalues == 0.0)
    assert zero.is_flat_like()
    assert zero.ratio is None


def test_spectrum_of_product(s2xs2):
    spec = spectrum(second_kind_matrix(s2xs2))
    expected = [-1.0] + [0.0] * 4 + [1.0] * 4
    assert np.allclose(spec.eigenvalues, expected, rtol=0.0, atol=1e-12)
    assert np.isclose(spec.mean, 1.0 / 3.0)
    assert spec.ratio < -1.0 / 11.0


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_trace_identity_on_random_einstein(n, einstein_corpus):
    for tensor in einstein_corpus[n]:
        op = second_kind_matrix(tensor)
        spec = spectrum(op)
        assert np.isclose(op.trace(), (n + 2) / (2 * n) * tensor.scalar(), rtol=1e-12)
        assert np.isclose(spec.sum_sq(), np.sum(op.matrix**2), rtol=1e-12)
        assert spec.trace_ok


def test_spectrum_is_frame_invariant(einstein_corpus):
    tensor = einstein_corpus[5][1]
    rotated = tensor.transformed(random_orthogonal(5, 8))
    first = spectrum(second_kind_matrix(tensor)).eigenvalues
    second = spectrum(second_kind_matrix(rotated)).eigenvalues
    assert np.allclose(first, second, rtol=0.0, atol=1e-8 * np.max(np.abs(first)))


@seed(3)
@settings(max_examples=20, deadline=None)
@given(arrays(float, (SIZE, SIZE), elements=ELEMENTS))
def test_jacobi_agrees_with_lapack(raw):
    matrix = np.round(0.5 * (raw + raw.T), 6)
    values, vectors = jacobi_eigh(matrix)
    scale = max(1.0, np.max(np.abs(matrix)))
    assert np.allclose(values, np.linalg.eigvalsh(matrix), rtol=0.0, atol=1e-10 * scale)
    assert np.allclose(vectors.T @ vectors, np.eye(SIZE), rtol=0.0, atol=1e-10)
    assert np.allclose(vectors @ np.diag(values) @ vectors.T, matrix, rtol=0.0, atol=1e-9 * scale)


def test_jacobi_leaves_input_untouched():
    matrix = np.array([[2.0, 1.0, 0.5], [1.0, 3.0, -1.0], [0.5, -1.0, 1.0]])
    before = matrix.copy()
    JacobiEigensolver().solve(matrix)
    assert np.array_equal(matrix, before)


def test_jacobi_reports_non_convergence():
    matrix = np.array([[1.0, 2.0], [2.0, -1.0]])
    with pytest.raises(ConvergenceError):
        JacobiEigensolver(max_sweeps=0).solve(matrix)


def test_spectrum_payload_restores_values(s2xs2):
    spec = spectrum(second_kind_matrix(s2xs2))
    restored = Spectrum.from_payload(spec.to_payload().model_dump())
    assert np.array_equal(restored.eigenvalues, spec.eigenvalues)
    assert restored.n == 4


def test_s_action_by_metric_scales_by_four():
    tensor = metric_square(4)
    assert np.allclose(s_action(SymTensor.metric(4), tensor), 4.0 * tensor.entries)
    assert np.all(s_action(SymTensor.metric(4), CurvatureTensor.zeros(4)) == 0.0)


def test_traceless_s_action_is_orthogonal_to_metric_square():
    tensor = metric_square(4)
    image = CurvatureTensor(s_action(SymTensor.diagonal([1.0, -1.0, 0.0, 0.0]), tensor))
    assert abs(inner_product(image, tensor)) < 1e-12


def test_sjw_norms_vanish_without_weyl(sphere4):
    norms = sjw_norms(sphere4)
    assert np.allclose(norms.values, 0.0, atol=1e-20)
    assert norms.total == pytest.approx(0.0, abs=1e-20)
    assert norms.degenerate


def test_sjw_individual_norms_need_simple_spectrum(sphere4):
    with pytest.raises(DegenerateEigenspaceError):
        sjw_norms(sphere4, require_individual=True)


@pytest.mark.parametrize("n, ratio", [(4, 6.0), (5, 8.8), (6, 34.0 / 3.0)])
def test_sjw_total_against_weyl_norm(n, ratio):
    tensor = random_einstein(n, seed=n)
    weyl_norm = norm_sq(decompose(tensor).weyl)
    norms = sjw_norms(tensor)
    assert np.isclose(norms.total / weyl_norm, ratio, rtol=1e-10)
    assert np.isclose(np.sum(norms.values), norms.total, rtol=1e-10)
    assert np.isclose(norms.weighted, np.sum(norms.spectrum.eigenvalues * norms.values), rtol=1e-9)


def _rotate_within_eigenspaces(values: np.ndarray, vectors: np.ndarray, seed_value: int) -> np.ndarray:
    rng = np.random.default_rng(seed_value)
    rotated = vectors.copy()
    start = 0
    while start < len(values):
        stop = start + 1
        while stop < len(values) and values[stop] - values[start] < 1e-7:
            stop += 1
        q, _ = np.linalg.qr(rng.normal(size=(stop - start, stop - start)))
        rotated[:, start:stop] = vectors[:, start:stop] @ q
        start = stop
    return rotated


def test_weighted_sum_ignores_choice_inside_eigenspaces(cp2):
    norms = sjw_norms(cp2)
    assert norms.degenerate

    basis = traceless_basis(4)
    gram = weyl_gram(decompose(cp2).weyl, basis)
    values = norms.spectrum.eigenvalues
    vectors = _rotate_within_eigenspaces(values, norms.spectrum.eigenvectors, 21)
    alternative = np.einsum("aj,ab,bj->j", vectors, gram, vectors)

    assert np.isclose(np.sum(values * alternative), norms.weighted, rtol=1e-10)
    assert np.isclose(np.sum(alternative), norms.total, rtol=1e-10)
    assert np.isclose(weighted_weyl_sum(cp2), norms.weighted, rtol=1e-12)


@pytest.mark.parametrize("size", [1, 2, 3, 9, 14, 35])
def test_rotation_rounds_cover_every_pair_once(size):
    rounds = rotation_rounds(size)
    pairs = [(int(p), int(q)) for ps, qs in rounds for p, q in zip(ps, qs)]
    assert sorted(pairs) == [(p, q) for p in range(size) for q in range(p + 1, size)]
    for ps, qs in rounds:
        indices = np.concatenate([ps, qs])
        assert len(set(indices.tolist())) == indices.size
        assert np.all(ps < qs)


def test_jacobi_skips_negligible_entries():
    matrix = np.array([[1.0, 0.5, 1e-17], [0.5, 2.0, 1e-17], [1e-17, 1e-17, 3.0]])
    result = JacobiEigensolver().solve(matrix)
    assert result.sweeps == 1
    assert np.array_equal(result.eigenvectors[:, 2], [0.0, 0.0, 1.0])
    assert result.eigenvalues[2] == 3.0
    assert np.allclose(result.eigenvalues[:2], [1.5 - np.sqrt(0.5), 1.5 + np.sqrt(0.5)], rtol=0.0, atol=1e-14)


def test_eigentensors_are_eigenvectors_of_rbar(einstein_corpus):
    tensor = einstein_corpus[4][0]
    op = second_kind_matrix(tensor)
    spec = spectrum(op)
    phis = spec.eigentensors(op.basis)
    assert len(phis) == op.N
    for value, phi in zip(spec.eigenvalues, phis):
        assert abs(phi.trace()) < 1e-12
        assert phi.norm_sq() == pytest.approx(1.0)
        assert rbar_apply(tensor, phi).traceless().allclose(phi * value, atol=1e-9)

    with pytest.raises(DimensionMismatchError):
        Spectrum.from_values([1.0] * 9, 4).eigentensors(op.basis)


@pytest.mark.slow
@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_trace_identity_on_full_corpus(n):
    for index in range(100):
        tensor = random_einstein(n, index)
        op = second_kind_matrix(tensor)
        assert op.trace_check(1e-9), (n, index, op.trace_residual())
        spec = spectrum(op)
        assert spec.trace_ok
        assert tensor.scalar() == pytest.approx(n * (n - 1) * spec.mean, rel=1e-9)
