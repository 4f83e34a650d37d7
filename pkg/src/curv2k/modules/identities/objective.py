"""
📉 THE CUBIC f(lambda) - Algebraic right-hand side of the Laplacian estimate

f(lambda) = [N(N-3) theta - (2N - 9n + 6) N] mean^3
          + [(2N - 12n + 6) - (N-3) theta] mean sum lambda^2
          + 3n sum lambda^3

f is symmetric in the eigenvalues and homogeneous of degree 3. When any input
is a Fraction (or int) the evaluation is exact; otherwise it runs in floats.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Sequence

import numpy as np

from curv2k.core.exceptions import DimensionMismatchError
from curv2k.modules.second_kind.basis import traceless_dimension
from curv2k.modules.second_kind.spectral import Spectrum


def f_coefficients(n: int, theta):
    """(c3, c2, c1) with f = c3 mean^3 + c2 mean sum lambda^2 + c1 sum lambda^3."""
    N = traceless_dimension(n)
    return (
        N * (N - 3) * theta - (2 * N - 9 * n + 6) * N,
        (2 * N - 12 * n + 6) - (N - 3) * theta,
        3 * n,
    )


def _is_exact(values: Sequence, theta) -> bool:
    return isinstance(theta, Rational) and all(isinstance(value, Rational) for value in values)


def f_lambda(spectrum: Spectrum | Sequence, n: int, theta):
    """Evaluate f on a spectrum or a plain eigenvalue list of length N."""
    values = spectrum.eigenvalues if isinstance(spectrum, Spectrum) else list(spectrum)
    N = traceless_dimension(n)
    if len(values) != N:
        raise DimensionMismatchError(f"f needs N = {N} eigenvalues for n = {n}, got {len(values)}")

    if _is_exact(values, theta):
        values = [Fraction(value) for value in values]
        theta = Fraction(theta)
        mean = sum(values, Fraction(0)) / N
        sum_sq = sum((value * value for value in values), Fraction(0))
        sum_cube = sum((value**3 for value in values), Fraction(0))
    else:
        values = [float(value) for value in values]
        theta = float(theta)
        mean = math.fsum(values) / N
        sum_sq = math.fsum(value * value for value in values)
        sum_cube = math.fsum(value**3 for value in values)

    c3, c2, c1 = f_coefficients(n, theta)
    return c3 * mean**3 + c2 * mean * sum_sq + c1 * sum_cube


def f_lambda_batch(values: np.ndarray, n: int, theta: float) -> np.ndarray:
    """Vectorized float f over the rows of a (k, N) array."""
    values = np.asarray(values, dtype=float)
    N = traceless_dimension(n)
    if values.ndim != 2 or values.shape[1] != N:
        raise DimensionMismatchError(f"Expected shape (k, {N}), got {values.shape}")
    c3, c2, c1 = f_coefficients(n, float(theta))
    mean = values.mean(axis=1)
    return c3 * mean**3 + c2 * mean * np.sum(values**2, axis=1) + c1 * np.sum(values**3, axis=1)


def f_scale(values: Sequence | np.ndarray) -> float:
    """max(|mean|, rms)^3, the natural magnitude of f at this spectrum."""
    array = np.asarray([float(value) for value in values])
    return float(max(abs(array.mean()), np.sqrt(np.mean(array**2))) ** 3)
