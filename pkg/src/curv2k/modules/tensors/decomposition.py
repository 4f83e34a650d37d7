from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from curv2k.core.exceptions import InvalidDimensionError
from curv2k.modules.tensors.algebra import kulkarni_nomizu, metric_square
from curv2k.modules.tensors.curvature_tensor import CurvatureTensor
from curv2k.modules.tensors.sym_tensor import SymTensor
from curv2k.settings import settings


@dataclass(frozen=True, eq=False)
class RiemannDecomposition:
    """Irreducible pieces of R: R = W + Ric ^ g / (n-2) - Scal g ^ g / (2(n-1)(n-2))."""

    weyl: CurvatureTensor
    ricci: SymTensor
    scalar: float
    n: int

    @property
    def traceless_ricci(self) -> SymTensor:
        return self.ricci.traceless()

    def recompose(self) -> CurvatureTensor:
        n = self.n
        g = SymTensor.metric(n)
        return (
            self.weyl
            + kulkarni_nomizu(self.ricci, g) * (1.0 / (n - 2))
            - metric_square(n) * (self.scalar / (2.0 * (n - 1) * (n - 2)))
        )

    def einstein_defect(self) -> float:
        """||Ric0|| / ||Ric|| (Frobenius); 0 for a vanishing Ricci tensor."""
        ricci_norm = self.ricci.norm()
        if ricci_norm == 0.0:
            return 0.0
        return self.traceless_ricci.norm() / ricci_norm

    def is_einstein(self, tolerance: float | None = None) -> bool:
        tolerance = settings.EINSTEIN_TOLERANCE if tolerance is None else tolerance
        return self.einstein_defect() < tolerance or self.ricci.norm() == 0.0


def decompose(tensor: CurvatureTensor) -> RiemannDecomposition:
    """Split R into its Weyl, Ricci and scalar parts (needs n >= 3)."""
    n = tensor.n
    if n < 3:
        raise InvalidDimensionError(f"Weyl decomposition needs n >= 3, got n = {n}")

    ricci = tensor.ricci()
    scalar = ricci.trace()
    g = SymTensor.metric(n)
    weyl = (
        tensor
        - kulkarni_nomizu(ricci, g) * (1.0 / (n - 2))
        + metric_square(n) * (scalar / (2.0 * (n - 1) * (n - 2)))
    )
    return RiemannDecomposition(weyl=weyl, ricci=ricci, scalar=scalar, n=n)


def einstein_weyl(tensor: CurvatureTensor) -> CurvatureTensor:
    """W = R - Scal / (2n(n-1)) g ^ g, valid for Einstein tensors."""
    n = tensor.n
    return tensor - metric_square(n) * (tensor.scalar() / (2.0 * n * (n - 1)))


def weyl_trace_residual(weyl: CurvatureTensor) -> float:
    """max_jl |sum_i W_ijil|."""
    return float(np.max(np.abs(np.einsum("ijil->jl", weyl.entries))))
