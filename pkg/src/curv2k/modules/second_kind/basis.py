from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations

import numpy as np

from curv2k.core.exceptions import InvalidDimensionError
from curv2k.modules.tensors.sym_tensor import SymTensor


def traceless_dimension(n: int) -> int:
    """N = dim S^2_0(V) = (n-1)(n+2)/2."""
    return (n - 1) * (n + 2) // 2


@dataclass(frozen=True, eq=False)
class TracelessBasis:
    """
    🧭 ORTHONORMAL BASIS OF S^2_0(V) - The frame in which R-ring becomes a matrix

    LAYOUT:
    1. Off-diagonal elements (e_i (.) e_j) / sqrt(2), i < j, lexicographic
    2. Diagonal elements D_k = (e_1(.)e_1 + ... + e_k(.)e_k - k e_{k+1}(.)e_{k+1}) / sqrt(k + k^2),
       k = 1 ... n-1

    Orthonormal under <A, B> = tr(A^T B).
    """

    n: int
    elements: tuple[SymTensor, ...]

    @property
    def N(self) -> int:
        return len(self.elements)

    @cached_property
    def stacked(self) -> np.ndarray:
        """Elements as one (N, n, n) array."""
        array = np.stack([element.entries for element in self.elements])
        array.setflags(write=False)
        return array

    def gram(self) -> np.ndarray:
        return np.einsum("aij,bij->ab", self.stacked, self.stacked)

    def combine(self, coefficients: np.ndarray) -> SymTensor:
        """sum_a c_a S^a for a coefficient vector in this basis."""
        return SymTensor(np.einsum("a,aij->ij", np.asarray(coefficients, dtype=float), self.stacked))

    def __len__(self) -> int:
        return self.N


@lru_cache
def traceless_basis(n: int) -> TracelessBasis:
    if n < 2:
        raise InvalidDimensionError(f"S^2_0(V) needs n >= 2, got n = {n}")

    elements = []
    for i, j in combinations(range(n), 2):
        entries = np.zeros((n, n))
        entries[i, j] = entries[j, i] = 1.0 / np.sqrt(2.0)
        elements.append(SymTensor(entries))

    for k in range(1, n):
        diagonal = np.zeros(n)
        diagonal[:k] = 1.0
        diagonal[k] = -float(k)
        elements.append(SymTensor.diagonal(diagonal / np.sqrt(k + k * k)))

    return TracelessBasis(n=n, elements=tuple(elements))
