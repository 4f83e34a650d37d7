from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel, Field

from curv2k.core.exceptions import DimensionMismatchError
from curv2k.modules.second_kind.basis import TracelessBasis, traceless_dimension
from curv2k.modules.second_kind.eigensolver import JacobiEigensolver
from curv2k.modules.second_kind.operator import SecondKindOperator
from curv2k.modules.tensors.sym_tensor import SymTensor
from curv2k.settings import settings


class SpectrumPayload(BaseModel):
    """JSON form of a spectrum."""

    n: int = Field(..., description="Dimension of V")
    N: int = Field(..., description="Dimension of S^2_0(V), (n-1)(n+2)/2")
    eigenvalues: list[float] = Field(..., description="Eigenvalues of the second-kind operator, ascending")
    mean: float = Field(..., description="Average eigenvalue")
    trace_check: bool = Field(..., description="Whether the trace identity tr = (n+2)/(2n) Scal held")


@dataclass(frozen=True, eq=False)
class Spectrum:
    """
    📊 SPECTRUM OF R-RING - lambda_1 <= ... <= lambda_N and their mean

    eigenvectors holds coefficient vectors in the traceless basis as columns;
    it is None for spectra built from bare eigenvalue lists.
    """

    eigenvalues: np.ndarray
    n: int
    eigenvectors: np.ndarray | None = None
    matrix_norm: float | None = None
    trace_ok: bool = True

    def __post_init__(self):
        values = np.sort(np.asarray(self.eigenvalues, dtype=float))
        if values.ndim != 1 or values.size != traceless_dimension(self.n):
            raise DimensionMismatchError(
                f"Expected {traceless_dimension(self.n)} eigenvalues for n = {self.n}, got {values.size}"
            )
        values.setflags(write=False)
        object.__setattr__(self, "eigenvalues", values)
        if self.matrix_norm is None:
            object.__setattr__(self, "matrix_norm", float(np.sqrt(np.sum(values**2))))

    @classmethod
    def from_values(cls, values, n: int) -> Spectrum:
        return cls(eigenvalues=np.asarray(values, dtype=float), n=n)

    @property
    def N(self) -> int:
        return self.eigenvalues.size

    @property
    def mean(self) -> float:
        return float(math.fsum(self.eigenvalues) / self.N)

    @property
    def minimum(self) -> float:
        return float(self.eigenvalues[0])

    def sum_sq(self) -> float:
        return float(math.fsum(self.eigenvalues**2))

    def sum_cube(self) -> float:
        return float(math.fsum(self.eigenvalues**3))

    def rms(self) -> float:
        return float(np.sqrt(self.sum_sq() / self.N))

    def is_flat_like(self, tolerance: float | None = None) -> bool:
        """|mean| <= tol * ||M||_F; ratios are undefined in this case."""
        tolerance = settings.FLAT_TOLERANCE if tolerance is None else tolerance
        return abs(self.mean) <= tolerance * self.matrix_norm

    @property
    def ratio(self) -> float | None:
        """lambda_1 / mean, or None when flat-like."""
        if self.is_flat_like():
            return None
        return self.minimum / self.mean

    def is_degenerate(self, gap: float | None = None) -> bool:
        gap = settings.DEGENERACY_GAP if gap is None else gap
        threshold = gap * max(1.0, float(np.max(np.abs(self.eigenvalues))))
        return bool(np.any(np.diff(self.eigenvalues) < threshold))

    def eigentensors(self, basis: TracelessBasis) -> list[SymTensor]:
        if self.eigenvectors is None:
            raise DimensionMismatchError("This spectrum carries no eigenvectors")
        return [basis.combine(self.eigenvectors[:, j]) for j in range(self.N)]

    def to_payload(self) -> SpectrumPayload:
        return SpectrumPayload(
            n=self.n,
            N=self.N,
            eigenvalues=[float(value) for value in self.eigenvalues],
            mean=self.mean,
            trace_check=self.trace_ok,
        )

    @classmethod
    def from_payload(cls, payload: SpectrumPayload | dict) -> Spectrum:
        if isinstance(payload, dict):
            payload = SpectrumPayload.model_validate(payload)
        if payload.N != traceless_dimension(payload.n):
            raise DimensionMismatchError(f"N = {payload.N} does not match n = {payload.n}")
        return cls(eigenvalues=np.asarray(payload.eigenvalues), n=payload.n, trace_ok=payload.trace_check)


def spectrum(op: SecondKindOperator, solver: JacobiEigensolver | None = None) -> Spectrum:
    """Diagonalize R-ring; sum of eigenvalues is checked against the matrix trace."""
    solver = JacobiEigensolver() if solver is None else solver
    result = solver.solve(op.matrix)

    trace = op.trace()
    total = math.fsum(result.eigenvalues)
    scale = max(float(np.linalg.norm(op.matrix)), 1e-300)
    trace_ok = abs(total - trace) <= settings.FLOAT_TOLERANCE * scale and op.trace_check()

    return Spectrum(
        eigenvalues=result.eigenvalues,
        n=op.n,
        eigenvectors=result.eigenvectors,
        matrix_norm=float(np.linalg.norm(op.matrix)),
        trace_ok=trace_ok,
    )
