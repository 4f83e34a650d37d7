import numpy as np
import pytest

from curv2k.core.exceptions import InvalidDimensionError, InvalidParameterError, ModelSpecError
from curv2k.modules.model_spaces import (
    SplitMix64,
    build_model,
    constant_curvature,
    flat,
    fubini_study,
    parse_model_spec,
    product_spheres,
    random_einstein,
    required_radius,
)
from curv2k.modules.second_kind import second_kind_matrix, spectrum
from curv2k.modules.tensors import bianchi_residual, decompose, metric_square, norm_sq, symmetry_residual

# First outputs of the reference SplitMix64 stream started from state 0
SPLITMIX_SEED_ZERO = (0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F)


def test_splitmix_reference_stream():
    stream = SplitMix64(0)
    assert tuple(stream.next_uint64() for _ in range(3)) == SPLITMIX_SEED_ZERO


def test_splitmix_uniforms_are_in_range():
    values = SplitMix64(42).uniforms(1000, -1.0, 1.0)
    assert np.all(values >= -1.0) and np.all(values < 1.0)
    assert np.array_equal(values, SplitMix64(42).uniforms(1000, -1.0, 1.0))


def test_constant_curvature():
    sphere = constant_curvature(4, 1.0)
    assert sphere.scalar() == pytest.approx(12.0)
    assert np.allclose(spectrum(second_kind_matrix(sphere)).eigenvalues, 1.0)

    scaled = constant_curvature(5, 2.0)
    assert scaled.scalar() == pytest.approx(40.0)
    assert spectrum(second_kind_matrix(scaled)).mean == pytest.approx(2.0)

    assert np.all(constant_curvature(4, 0.0).entries == 0.0)
    assert np.all(flat(6).entries == 0.0)


def test_product_spheres(s2xs2):
    parts = decompose(s2xs2)
    assert parts.is_einstein()
    assert parts.scalar == pytest.approx(4.0)
    assert spectrum(second_kind_matrix(s2xs2)).mean == pytest.approx(1.0 / 3.0)

    mixed = product_spheres(2, 3, 1.0)
    assert mixed.n == 5
    assert decompose(mixed).is_einstein()
    assert required_radius(2, 3, 1.0) == pytest.approx(np.sqrt(2.0))


def test_product_spheres_reports_required_radius():
    with pytest.raises(InvalidParameterError, match="r2 must be 1.41421356"):
        product_spheres(2, 3, 1.0, 1.0)
    with pytest.raises(InvalidDimensionError):
        product_spheres(1, 3)


def test_fubini_study(cp2):
    parts = decompose(cp2)
    assert parts.einstein_defect() < 1e-12
    assert parts.scalar == pytest.approx(24.0)

    sectional = [cp2.entries[i, j, i, j] for i in range(4) for j in range(4) if i != j]
    assert all(value == pytest.approx(1.0) or value == pytest.approx(4.0) for value in sectional)

    spec = spectrum(second_kind_matrix(cp2))
    assert spec.mean == pytest.approx(2.0)
    assert spec.minimum < 0.0

    assert spectrum(second_kind_matrix(fubini_study(3))).minimum < 0.0
    with pytest.raises(InvalidDimensionError):
        fubini_study(1)


@pytest.mark.parametrize("n", [4, 5, 6, 8])
def test_random_einstein_properties(n):
    tensor = random_einstein(n, seed=17)
    parts = decompose(tensor)
    assert parts.is_einstein(1e-12)
    assert parts.scalar > 0.0
    assert spectrum(second_kind_matrix(tensor)).mean == pytest.approx(1.0)
    assert norm_sq(parts.weyl) / norm_sq(tensor) == pytest.approx(0.5)


def test_random_einstein_is_seeded():
    first = random_einstein(5, seed=9)
    assert np.array_equal(first.entries, random_einstein(5, seed=9).entries)
    assert not np.array_equal(first.entries, random_einstein(5, seed=10).entries)


def test_random_einstein_without_weyl_part():
    tensor = random_einstein(4, seed=3, weyl_amplitude=0.0)
    assert np.array_equal(tensor.entries, (metric_square(4) * 0.5).entries)
    with pytest.raises(InvalidParameterError):
        random_einstein(4, seed=3, weyl_amplitude=-1.0)
    with pytest.raises(InvalidDimensionError):
        random_einstein(3)


def test_constructed_tensors_satisfy_symmetries(s2xs2, cp2):
    for tensor in (constant_curvature(6, 3.0), s2xs2, cp2, random_einstein(7, seed=2)):
        scale = tensor.max_abs()
        assert symmetry_residual(tensor.entries) <= 1e-12 * scale
        assert bianchi_residual(tensor.entries) <= 1e-12 * scale


@pytest.mark.parametrize(
    "text, kind, n",
    [
        ("sphere:n=4,k=1", "constant_curvature", 4),
        ("flat:n=4", "flat", 4),
        ("s2xs2", "product_spheres", 4),
        ("products:p=2,q=3,r1=1", "product_spheres", 5),
        ("cpm:m=2,c=4", "fubini_study", 4),
        ("random:n=6,seed=7,amp=0.5", "random_einstein", 6),
    ],
)
def test_parse_model_spec(text, kind, n):
    spec = parse_model_spec(text)
    assert spec.kind == kind
    assert spec.n == n
    assert build_model(spec).n == n
    assert spec.is_symmetric_space == (kind != "random_einstein")


@pytest.mark.parametrize(
    "text",
    ["torus:n=4", "sphere:k=1", "sphere:n=4.5", "sphere:n=four", "sphere:n=4,n=5", "sphere:n=4,q=2", "cpm:m"],
)
def test_parse_model_spec_rejects(text):
    with pytest.raises(ModelSpecError):
        parse_model_spec(text)


def test_build_model_wraps_infeasible_parameters():
    with pytest.raises(ModelSpecError, match="r2 must be"):
        build_model("products:p=2,q=3,r1=1,r2=1")
    with pytest.raises(ModelSpecError):
        build_model("cpm:m=1")


def test_spec_labels():
    assert parse_model_spec("s2xs2").label == "s2xs2"
    assert parse_model_spec("sphere:n=4,k=1").label == "sphere:k=1,n=4"
