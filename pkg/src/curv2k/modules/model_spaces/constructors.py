"""
🌍 MODEL SPACES - Named Einstein curvature tensors and a seeded random generator

THE CORPUS:
⚪ constant_curvature - round sphere of curvature kappa, R = (kappa/2) g ^ g
⬜ flat              - R = 0
⚫ product_spheres   - S^p(r1) x S^q(r2), Einstein when (p-1)/r1^2 = (q-1)/r2^2
🟣 fubini_study      - CP^m with holomorphic sectional curvature c
🎲 random_einstein   - random Weyl tensor plus (1/2) g ^ g, from a SplitMix64 stream
"""

from __future__ import annotations

import logging
import math

import numpy as np

from curv2k.core.exceptions import InvalidDimensionError, InvalidParameterError
from curv2k.modules.model_spaces.splitmix import SplitMix64
from curv2k.modules.tensors.algebra import bianchi_project, kulkarni_nomizu, metric_square, norm_sq
from curv2k.modules.tensors.curvature_tensor import CurvatureTensor, pair_symmetric_from_matrix
from curv2k.modules.tensors.decomposition import einstein_weyl
from curv2k.modules.tensors.sym_tensor import SymTensor
from curv2k.settings import settings

logger = logging.getLogger(__name__)


def constant_curvature(n: int, kappa: float = 1.0) -> CurvatureTensor:
    if n < 2:
        raise InvalidDimensionError(f"Constant curvature needs n >= 2, got n = {n}")
    return metric_square(n) * (kappa / 2.0)


def flat(n: int) -> CurvatureTensor:
    if n < 2:
        raise InvalidDimensionError(f"Flat space needs n >= 2, got n = {n}")
    return CurvatureTensor.zeros(n)


def required_radius(p: int, q: int, r1: float) -> float:
    """r2 making S^p(r1) x S^q(r2) Einstein."""
    return r1 * math.sqrt((q - 1) / (p - 1))


def product_spheres(p: int, q: int, r1: float = 1.0, r2: float | None = None) -> CurvatureTensor:
    if p < 2 or q < 2:
        raise InvalidDimensionError(f"Both sphere factors need dimension >= 2, got p = {p}, q = {q}")
    if r1 <= 0 or (r2 is not None and r2 <= 0):
        raise InvalidParameterError(f"Radii must be positive, got r1 = {r1}, r2 = {r2}")

    needed = required_radius(p, q, r1)
    r2 = needed if r2 is None else r2
    first, second = (p - 1) / r1**2, (q - 1) / r2**2
    if abs(first - second) > 1e-12 * max(first, second):
        raise InvalidParameterError(
            f"S^{p}({r1}) x S^{q}({r2}) is not Einstein: (p-1)/r1^2 = {first:.12g} but (q-1)/r2^2 = {second:.12g};"
            f" r2 must be {needed:.17g}"
        )

    n = p + q
    g1 = SymTensor.diagonal([1.0] * p + [0.0] * q)
    g2 = SymTensor.diagonal([0.0] * p + [1.0] * q)
    tensor = kulkarni_nomizu(g1, g1) * (0.5 / r1**2) + kulkarni_nomizu(g2, g2) * (0.5 / r2**2)
    logger.info(f"Built S^{p}({r1:g}) x S^{q}({r2:g}), n = {n}, Ric = {first:g} g")
    return tensor


def complex_structure(m: int) -> np.ndarray:
    """Omega_ik = g(J e_i, e_k) with J e_{2k} = e_{2k+1}."""
    omega = np.zeros((2 * m, 2 * m))
    for k in range(m):
        omega[2 * k, 2 * k + 1] = 1.0
        omega[2 * k + 1, 2 * k] = -1.0
    return omega


def fubini_study(m: int, c: float = 4.0) -> CurvatureTensor:
    """CP^m: R_ijkl = (c/4)[d_ik d_jl - d_il d_jk + O_ik O_jl - O_il O_jk + 2 O_ij O_kl]."""
    if m < 2:
        raise InvalidDimensionError(f"Fubini-Study needs complex dimension m >= 2, got m = {m}")
    n = 2 * m
    delta = np.eye(n)
    omega = complex_structure(m)
    entries = (c / 4.0) * (
        np.einsum("ik,jl->ijkl", delta, delta)
        - np.einsum("il,jk->ijkl", delta, delta)
        + np.einsum("ik,jl->ijkl", omega, omega)
        - np.einsum("il,jk->ijkl", omega, omega)
        + 2.0 * np.einsum("ij,kl->ijkl", omega, omega)
    )
    return CurvatureTensor(entries)


def random_einstein(n: int, seed: int = 0, weyl_amplitude: float | None = None) -> CurvatureTensor:
    """
    🎲 RANDOM EINSTEIN TENSOR - Deterministic from (n, seed, amplitude)

    HOW IT WORKS:
    1. Fill a symmetric m x m matrix on wedge^2 V (upper triangle, row-major) with
       SplitMix64 values in [-1, 1)
    2. Spread it to rank 4 and project onto the Bianchi subspace
    3. Remove Ric0 ^ g / (n-2), then the g ^ g part, leaving a Weyl tensor W
    4. Rescale so |W| = amplitude * |(1/2) g ^ g| and return W + (1/2) g ^ g

    The result has mean eigenvalue 1 and |W|^2 / |R|^2 = a^2 / (1 + a^2).
    """
    if n < 4:
        raise InvalidDimensionError(f"Random Einstein tensors need n >= 4, got n = {n}")
    amplitude = settings.DEFAULT_WEYL_AMPLITUDE if weyl_amplitude is None else weyl_amplitude
    if amplitude < 0:
        raise InvalidParameterError(f"Weyl amplitude must be non-negative, got {amplitude}")

    size = n * (n - 1) // 2
    stream = SplitMix64(seed)
    matrix = np.zeros((size, size))
    for a in range(size):
        for b in range(a, size):
            matrix[a, b] = matrix[b, a] = 2.0 * stream.uniform() - 1.0

    projected = bianchi_project(pair_symmetric_from_matrix(n, matrix))
    traceless_ricci = projected.ricci().traceless()
    einstein = projected - kulkarni_nomizu(traceless_ricci, SymTensor.metric(n)) * (1.0 / (n - 2))
    weyl = einstein_weyl(einstein)

    background = metric_square(n) * 0.5
    weyl_norm = math.sqrt(norm_sq(weyl))
    if amplitude == 0.0 or weyl_norm == 0.0:
        return background
    target = amplitude * math.sqrt(2.0 * n * (n - 1))
    return weyl * (target / weyl_norm) + background
