"""
🌀 CURVATURE OPERATOR OF THE SECOND KIND - R acting on traceless symmetric two-tensors

WHAT IT DOES:
R-bar(phi)_ij = sum_kl R_iklj phi_kl maps S^2(V) to itself. Restricting it to
S^2_0(V) and projecting back gives R-ring. In an orthonormal traceless basis
{S^a} its matrix is M_ab = <R-bar(S^a), S^b>; the projection costs nothing
because every S^b is already traceless.

TRACE CHECK:
tr(M) = tr(R-bar) - <R-bar(g / sqrt(n)), g / sqrt(n)> = (n + 2) / (2n) * Scal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from curv2k.core.exceptions import DimensionMismatchError
from curv2k.modules.second_kind.basis import TracelessBasis, traceless_basis
from curv2k.modules.tensors.curvature_tensor import CurvatureTensor
from curv2k.modules.tensors.sym_tensor import SymTensor
from curv2k.settings import settings


def rbar_apply(tensor: CurvatureTensor, phi: SymTensor) -> SymTensor:
    """R-bar(phi)_ij = sum_kl R_iklj phi_kl."""
    if tensor.n != phi.n:
        raise DimensionMismatchError(f"R-bar operands differ in dimension: {tensor.n} vs {phi.n}")
    return SymTensor(np.einsum("iklj,kl->ij", tensor.entries, phi.entries))


@dataclass(frozen=True, eq=False)
class SecondKindOperator:
    n: int
    matrix: np.ndarray
    basis: TracelessBasis
    scalar: float

    @property
    def N(self) -> int:
        return self.matrix.shape[0]

    def trace(self) -> float:
        return float(np.trace(self.matrix))

    def expected_trace(self) -> float:
        return (self.n + 2) / (2.0 * self.n) * self.scalar

    def trace_residual(self) -> float:
        return abs(self.trace() - self.expected_trace())

    def trace_check(self, tolerance: float | None = None) -> bool:
        """tr(M) == (n+2)/(2n) Scal, relative to max(|expected|, ||M||_F)."""
        tolerance = settings.IDENTITY_TOLERANCE if tolerance is None else tolerance
        scale = max(abs(self.expected_trace()), float(np.linalg.norm(self.matrix)))
        if scale == 0.0:
            return True
        return self.trace_residual() <= tolerance * scale

    def apply(self, phi: SymTensor) -> SymTensor:
        """R-ring(phi) for a traceless phi, via the matrix and the basis."""
        coefficients = np.einsum("aij,ij->a", self.basis.stacked, phi.entries)
        return self.basis.combine(self.matrix @ coefficients)


def second_kind_matrix(tensor: CurvatureTensor, basis: TracelessBasis | None = None) -> SecondKindOperator:
    basis = traceless_basis(tensor.n) if basis is None else basis
    if basis.n != tensor.n:
        raise DimensionMismatchError(f"Basis is for n = {basis.n}, tensor has n = {tensor.n}")

    images = np.einsum("iklj,akl->aij", tensor.entries, basis.stacked)
    matrix = np.einsum("aij,bij->ab", images, basis.stacked)
    matrix = 0.5 * (matrix + matrix.T)
    matrix.setflags(write=False)
    return SecondKindOperator(n=tensor.n, matrix=matrix, basis=basis, scalar=tensor.scalar())
