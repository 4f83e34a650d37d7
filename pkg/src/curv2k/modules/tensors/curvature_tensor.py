"""
🧱 ALGEBRAIC CURVATURE TENSORS - Rank-4 tensors with every Riemann symmetry

WHAT IS THIS FILE?
The storage type for R, W and every model space. A CurvatureTensor is a dense
n x n x n x n array that has been checked on construction for
- the pair antisymmetries R_ijkl = -R_jikl = -R_ijlk
- the pair exchange R_ijkl = R_klij
- the first Bianchi identity R_ijkl + R_jkil + R_kijl = 0

Residuals are measured as max-abs values divided by ||R||inf so that
acceptance does not depend on scale.

THE TWO VIEWS:
🔢 rank4 - the dense array, used by contractions and the S-action
🔲 first kind - the m x m symmetric matrix on wedge^2 V, m = n(n-1)/2,
   with pairs (i, j), i < j, in lexicographic order
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations

import numpy as np

from curv2k.core.exceptions import DimensionMismatchError, InvalidDimensionError, SymmetryError
from curv2k.modules.tensors.sym_tensor import SymTensor
from curv2k.settings import settings


@lru_cache
def wedge_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Lexicographic pairs (i, j), i < j, indexing the basis {e_i ^ e_j} of wedge^2 V."""
    return tuple(combinations(range(n), 2))


def symmetry_residual(entries: np.ndarray) -> float:
    """Largest violation of R_ijkl = -R_jikl = -R_ijlk = R_klij."""
    return float(
        max(
            np.max(np.abs(entries + entries.transpose(1, 0, 2, 3))),
            np.max(np.abs(entries + entries.transpose(0, 1, 3, 2))),
            np.max(np.abs(entries - entries.transpose(2, 3, 0, 1))),
        )
    )


def bianchi_residual(entries: np.ndarray) -> float:
    """Max over index triples of |T_ijkl + T_jkil + T_kijl|."""
    cyclic = entries + entries.transpose(1, 2, 0, 3) + entries.transpose(2, 0, 1, 3)
    return float(np.max(np.abs(cyclic)))


def pair_symmetric_from_matrix(n: int, matrix: np.ndarray) -> np.ndarray:
    """Spread a symmetric m x m matrix on wedge^2 V into a rank-4 array with pair symmetries.

    No Bianchi check happens here: the result is an element of S^2(wedge^2 V).
    """
    pairs = wedge_pairs(n)
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (len(pairs), len(pairs)):
        raise DimensionMismatchError(f"Expected a {len(pairs)}x{len(pairs)} matrix for n = {n}, got {matrix.shape}")

    entries = np.zeros((n, n, n, n))
    for a, (i, j) in enumerate(pairs):
        for b, (k, l) in enumerate(pairs):
            value = 0.5 * (matrix[a, b] + matrix[b, a])
            entries[i, j, k, l] = value
            entries[j, i, k, l] = -value
            entries[i, j, l, k] = -value
            entries[j, i, l, k] = value
    return entries


@dataclass(frozen=True, eq=False)
class CurvatureTensor:
    """
    🌀 ALGEBRAIC CURVATURE TENSOR - An element of S^2_B(wedge^2 V)

    Sign convention: R_ijij is the sectional curvature of the plane e_i ^ e_j,
    so the unit sphere is (1/2) g ^ g.
    """

    entries: np.ndarray

    def __post_init__(self):
        array = np.array(self.entries, dtype=float)
        if array.ndim != 4 or len(set(array.shape)) != 1:
            raise DimensionMismatchError(f"CurvatureTensor needs an n x n x n x n array, got shape {array.shape}")
        if array.shape[0] < 2:
            raise InvalidDimensionError(f"CurvatureTensor needs n >= 2, got n = {array.shape[0]}")

        scale = float(np.max(np.abs(array)))
        if scale > 0.0:
            tolerance = settings.MEMBERSHIP_TOLERANCE * scale
            symmetry = symmetry_residual(array)
            if symmetry > tolerance:
                raise SymmetryError(f"Index symmetries violated (residual {symmetry:.3e}, scale {scale:.3e})")
            bianchi = bianchi_residual(array)
            if bianchi > tolerance:
                raise SymmetryError(f"First Bianchi identity violated (residual {bianchi:.3e}, scale {scale:.3e})")

        array.setflags(write=False)
        object.__setattr__(self, "entries", array)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def zeros(cls, n: int) -> CurvatureTensor:
        return cls(np.zeros((n, n, n, n)))

    @classmethod
    def from_first_kind_matrix(cls, n: int, matrix: np.ndarray) -> CurvatureTensor:
        """Inverse of first_kind_matrix; the matrix must describe a Bianchi tensor."""
        return cls(pair_symmetric_from_matrix(n, matrix))

    @cached_property
    def _first_kind(self) -> np.ndarray:
        pairs = wedge_pairs(self.n)
        rows = np.array([p[0] for p in pairs])
        cols = np.array([p[1] for p in pairs])
        matrix = self.entries[rows[:, None], cols[:, None], rows[None, :], cols[None, :]]
        matrix.setflags(write=False)
        return matrix

    def first_kind_matrix(self) -> np.ndarray:
        """Matrix of R^(w)_ij = 1/2 sum R_ijkl w_kl in the basis {e_i ^ e_j} (entries R_ijkl)."""
        return self._first_kind

    def ricci(self) -> SymTensor:
        """Ric_jl = sum_i R_ijil."""
        return SymTensor(np.einsum("ijil->jl", self.entries))

    def scalar(self) -> float:
        return self.ricci().trace()

    def transformed(self, q: np.ndarray) -> CurvatureTensor:
        """Change of orthonormal frame: R'_abcd = Q_ai Q_bj Q_ck Q_dl R_ijkl."""
        q = np.asarray(q, dtype=float)
        if q.shape != (self.n, self.n):
            raise DimensionMismatchError(f"Frame change must be {self.n}x{self.n}, got {q.shape}")
        return CurvatureTensor(np.einsum("ai,bj,ck,dl,ijkl->abcd", q, q, q, q, self.entries, optimize=True))

    def _check_same_dimension(self, other: CurvatureTensor) -> None:
        if self.n != other.n:
            raise DimensionMismatchError(f"CurvatureTensor dimensions differ: {self.n} vs {other.n}")

    def __add__(self, other: CurvatureTensor) -> CurvatureTensor:
        self._check_same_dimension(other)
        return CurvatureTensor(self.entries + other.entries)

    def __sub__(self, other: CurvatureTensor) -> CurvatureTensor:
        self._check_same_dimension(other)
        return CurvatureTensor(self.entries - other.entries)

    def __mul__(self, scalar: float) -> CurvatureTensor:
        return CurvatureTensor(float(scalar) * self.entries)

    __rmul__ = __mul__

    def __neg__(self) -> CurvatureTensor:
        return CurvatureTensor(-self.entries)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.entries)))

    def to_payload(self) -> dict:
        """JSON schema {n, entries (row-major), representation: "rank4"}."""
        return {"n": self.n, "entries": self.entries.ravel().tolist(), "representation": "rank4"}

    @classmethod
    def from_payload(cls, payload: dict) -> CurvatureTensor:
        if payload.get("representation", "rank4") != "rank4":
            raise DimensionMismatchError(f"Unsupported representation: {payload.get('representation')}")
        n = int(payload["n"])
        entries = np.asarray(payload["entries"], dtype=float)
        if entries.size != n**4:
            raise DimensionMismatchError(f"Expected {n**4} entries for n = {n}, got {entries.size}")
        return cls(entries.reshape(n, n, n, n))
