import numpy as np
import pytest

from curv2k.modules.model_spaces import constant_curvature, fubini_study, product_spheres, random_einstein
from curv2k.modules.tensors import CurvatureTensor, bianchi_project, pair_symmetric_from_matrix


def random_orthogonal(n: int, seed: int) -> np.ndarray:
    """Haar-distributed orthogonal matrix from a QR factorization."""
    q, r = np.linalg.qr(np.random.default_rng(seed).normal(size=(n, n)))
    return q * np.sign(np.diag(r))


def random_curvature(n: int, seed: int) -> CurvatureTensor:
    """Generic (non-Einstein) algebraic curvature tensor."""
    size = n * (n - 1) // 2
    matrix = np.random.default_rng(seed).uniform(-1.0, 1.0, size=(size, size))
    return bianchi_project(pair_symmetric_from_matrix(n, matrix + matrix.T))


@pytest.fixture(scope="session")
def sphere4():
    return constant_curvature(4, 1.0)


@pytest.fixture(scope="session")
def s2xs2():
    return product_spheres(2, 2, 1.0, 1.0)


@pytest.fixture(scope="session")
def cp2():
    return fubini_study(2, 4.0)


@pytest.fixture(scope="session")
def einstein_corpus():
    """Two seeded random Einstein tensors per dimension n = 4 .. 8."""
    return {n: [random_einstein(n, seed) for seed in range(2)] for n in range(4, 9)}


@pytest.fixture(scope="session")
def mild_einstein():
    """Small-Weyl Einstein tensors, all inside lambda_1 >= -theta(n) mean."""
    return [random_einstein(n, seed, 0.02) for n in (4, 5, 6) for seed in range(2)]
