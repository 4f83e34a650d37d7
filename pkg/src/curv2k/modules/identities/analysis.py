from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from curv2k.modules.second_kind.basis import traceless_basis
from curv2k.modules.second_kind.operator import SecondKindOperator, second_kind_matrix
from curv2k.modules.second_kind.s_action import weyl_gram
from curv2k.modules.second_kind.spectral import Spectrum, spectrum
from curv2k.modules.tensors.algebra import norm_sq
from curv2k.modules.tensors.curvature_tensor import CurvatureTensor
from curv2k.modules.tensors.decomposition import decompose
from curv2k.settings import settings


@dataclass(frozen=True, eq=False)
class TensorAnalysis:
    """Everything the identity checks read off one tensor, each piece computed once."""

    tensor: CurvatureTensor

    @property
    def n(self) -> int:
        return self.tensor.n

    @cached_property
    def operator(self) -> SecondKindOperator:
        return second_kind_matrix(self.tensor, traceless_basis(self.n))

    @cached_property
    def spectrum(self) -> Spectrum:
        return spectrum(self.operator)

    @cached_property
    def weyl(self) -> CurvatureTensor:
        if self.n < 3:
            return CurvatureTensor.zeros(self.n)
        return decompose(self.tensor).weyl

    @cached_property
    def einstein_defect(self) -> float:
        ricci = self.tensor.ricci()
        ricci_norm = ricci.norm()
        return 0.0 if ricci_norm == 0.0 else ricci.traceless().norm() / ricci_norm

    def is_einstein(self, tolerance: float | None = None) -> bool:
        tolerance = settings.EINSTEIN_TOLERANCE if tolerance is None else tolerance
        return self.einstein_defect < tolerance

    @cached_property
    def norm_sq(self) -> float:
        return norm_sq(self.tensor)

    @cached_property
    def weyl_norm_sq(self) -> float:
        return norm_sq(self.weyl)

    @cached_property
    def weyl_gram(self) -> np.ndarray:
        return weyl_gram(self.weyl, self.operator.basis)

    @property
    def sjw_total(self) -> float:
        """sum_j |S^j W|^2."""
        return float(np.trace(self.weyl_gram))

    @property
    def sjw_weighted(self) -> float:
        """sum_j lambda_j |S^j W|^2."""
        return float(np.sum(self.operator.matrix * self.weyl_gram))


def analyze(tensor: CurvatureTensor | TensorAnalysis) -> TensorAnalysis:
    return tensor if isinstance(tensor, TensorAnalysis) else TensorAnalysis(tensor)
