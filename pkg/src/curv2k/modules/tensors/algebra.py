"""
➗ TENSOR ALGEBRA - Kulkarni-Nomizu products, the Bianchi projector and the (0,4) inner product

NORM CONVENTION:
inner_product and norm_sq use the unweighted full contraction
sum_ijkl R1_ijkl R2_ijkl. With it |g ^ g|^2 = 8n(n-1) and
|R|^2 = |W|^2 + 2n(n-1) mean^2 holds for Einstein tensors.

EXACT MODE:
exact_kulkarni_nomizu and exact_norm_sq run on Fractions (or ints) with
plain Python loops, for the rational constants that must not carry float noise.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import numpy as np

from curv2k.core.exceptions import DimensionMismatchError, SymmetryError
from curv2k.modules.tensors.curvature_tensor import CurvatureTensor, symmetry_residual
from curv2k.modules.tensors.sym_tensor import SymTensor
from curv2k.settings import settings


def kulkarni_nomizu(a: SymTensor, b: SymTensor) -> CurvatureTensor:
    """(A ^ B)_ijkl = A_ik B_jl + A_jl B_ik - A_jk B_il - A_il B_jk."""
    if a.n != b.n:
        raise DimensionMismatchError(f"Kulkarni-Nomizu operands differ in dimension: {a.n} vs {b.n}")
    x, y = a.entries, b.entries
    entries = (
        np.einsum("ik,jl->ijkl", x, y)
        + np.einsum("jl,ik->ijkl", x, y)
        - np.einsum("jk,il->ijkl", x, y)
        - np.einsum("il,jk->ijkl", x, y)
    )
    return CurvatureTensor(entries)


def metric_square(n: int) -> CurvatureTensor:
    """g ^ g, the constant-curvature building block."""
    g = SymTensor.metric(n)
    return kulkarni_nomizu(g, g)


def bianchi_project(tensor: np.ndarray) -> CurvatureTensor:
    """Orthogonal projection S^2(wedge^2 V) -> S^2_B(wedge^2 V).

    Removes b(T)_ijkl = (T_ijkl + T_jkil + T_kijl) / 3, the totally
    antisymmetric part.
    """
    entries = np.asarray(tensor.entries if isinstance(tensor, CurvatureTensor) else tensor, dtype=float)
    if entries.ndim != 4 or len(set(entries.shape)) != 1:
        raise DimensionMismatchError(f"Expected an n x n x n x n array, got shape {entries.shape}")

    scale = float(np.max(np.abs(entries))) if entries.size else 0.0
    residual = symmetry_residual(entries)
    if scale > 0.0 and residual > settings.MEMBERSHIP_TOLERANCE * scale:
        raise SymmetryError(f"Input lacks pair symmetries (residual {residual:.3e})")

    antisymmetric = (entries + entries.transpose(1, 2, 0, 3) + entries.transpose(2, 0, 1, 3)) / 3.0
    return CurvatureTensor(entries - antisymmetric)


def inner_product(first: CurvatureTensor, second: CurvatureTensor) -> float:
    """Unweighted (0,4) contraction sum_ijkl R1_ijkl R2_ijkl."""
    if first.n != second.n:
        raise DimensionMismatchError(f"Inner product operands differ in dimension: {first.n} vs {second.n}")
    return float(np.tensordot(first.entries, second.entries, axes=4))


def norm_sq(tensor: CurvatureTensor) -> float:
    return inner_product(tensor, tensor)


def exact_kulkarni_nomizu(a, b) -> list:
    """Kulkarni-Nomizu product of two square matrices of Fractions, as nested lists."""
    n = len(a)
    if len(b) != n or any(len(row) != n for row in a) or any(len(row) != n for row in b):
        raise DimensionMismatchError("Exact Kulkarni-Nomizu operands must be square and of equal size")
    a = [[Fraction(value) for value in row] for row in a]
    b = [[Fraction(value) for value in row] for row in b]

    result = [[[[Fraction(0)] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for i, j, k, l in product(range(n), repeat=4):
        result[i][j][k][l] = a[i][k] * b[j][l] + a[j][l] * b[i][k] - a[j][k] * b[i][l] - a[i][l] * b[j][k]
    return result


def exact_norm_sq(entries: list) -> Fraction:
    """Sum of squares of a nested rank-4 list, in exact arithmetic."""
    n = len(entries)
    return sum(
        (Fraction(entries[i][j][k][l]) ** 2 for i, j, k, l in product(range(n), repeat=4)),
        Fraction(0),
    )


def exact_metric_square_norm_sq(n: int) -> Fraction:
    """|g ^ g|^2 computed exactly; equals 8n(n-1)."""
    identity = [[int(i == j) for j in range(n)] for i in range(n)]
    return exact_norm_sq(exact_kulkarni_nomizu(identity, identity))
