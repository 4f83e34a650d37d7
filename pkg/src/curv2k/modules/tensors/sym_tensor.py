from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from curv2k.core.exceptions import DimensionMismatchError, InvalidDimensionError, SymmetryError
from curv2k.settings import settings


@dataclass(frozen=True, eq=False)
class SymTensor:
    """
    📐 SYMMETRIC TWO-TENSOR - An element of S^2(V) in a fixed orthonormal frame

    WHAT IT IS:
    An n x n real symmetric array. The metric g, traceless tensors in S^2_0(V)
    and Ricci tensors are all SymTensors.

    INNER PRODUCT:
    <A, B> = tr(A^T B), the S^2(V) convention. It is never mixed with the
    wedge^2 V convention or the unweighted (0,4) contraction.
    """

    entries: np.ndarray

    def __post_init__(self):
        array = np.array(self.entries, dtype=float)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise DimensionMismatchError(f"SymTensor needs a square array, got shape {array.shape}")
        if array.shape[0] < 2:
            raise InvalidDimensionError(f"SymTensor needs n >= 2, got n = {array.shape[0]}")

        scale = max(float(np.max(np.abs(array))), 1.0)
        residual = float(np.max(np.abs(array - array.T)))
        if residual > settings.MEMBERSHIP_TOLERANCE * scale:
            raise SymmetryError(f"SymTensor entries are not symmetric (residual {residual:.3e})")

        array = 0.5 * (array + array.T)
        array.setflags(write=False)
        object.__setattr__(self, "entries", array)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def metric(cls, n: int) -> SymTensor:
        """The metric g = sum e_i (x) e_i, i.e. the identity matrix."""
        return cls(np.eye(n))

    @classmethod
    def zeros(cls, n: int) -> SymTensor:
        return cls(np.zeros((n, n)))

    @classmethod
    def diagonal(cls, values) -> SymTensor:
        return cls(np.diag(np.asarray(values, dtype=float)))

    def trace(self) -> float:
        return float(np.trace(self.entries))

    def traceless(self) -> SymTensor:
        """A_0 = A - (tr A / n) g."""
        return SymTensor(self.entries - (self.trace() / self.n) * np.eye(self.n))

    def inner(self, other: SymTensor) -> float:
        """<A, B> = tr(A^T B)."""
        self._check_same_dimension(other)
        return float(np.sum(self.entries * other.entries))

    def norm_sq(self) -> float:
        return self.inner(self)

    def norm(self) -> float:
        return float(np.sqrt(self.norm_sq()))

    def eigenvalues(self) -> np.ndarray:
        """Sorted eigenvalues, used for frame-invariance checks of Ricci tensors."""
        return np.sort(np.linalg.eigvalsh(self.entries))

    def _check_same_dimension(self, other: SymTensor) -> None:
        if self.n != other.n:
            raise DimensionMismatchError(f"SymTensor dimensions differ: {self.n} vs {other.n}")

    def __add__(self, other: SymTensor) -> SymTensor:
        self._check_same_dimension(other)
        return SymTensor(self.entries + other.entries)

    def __sub__(self, other: SymTensor) -> SymTensor:
        self._check_same_dimension(other)
        return SymTensor(self.entries - other.entries)

    def __mul__(self, scalar: float) -> SymTensor:
        return SymTensor(float(scalar) * self.entries)

    __rmul__ = __mul__

    def __neg__(self) -> SymTensor:
        return SymTensor(-self.entries)

    def allclose(self, other: SymTensor, atol: float = 1e-12) -> bool:
        return self.n == other.n and bool(np.allclose(self.entries, other.entries, rtol=0.0, atol=atol))
