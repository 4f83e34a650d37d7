from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

import numpy as np
from pydantic import BaseModel, Field

from curv2k.core.exceptions import DimensionMismatchError, InvalidParameterError
from curv2k.modules.extremum.candidates import candidate_lambda_m
from curv2k.modules.extremum.threshold import format_fraction, theta as threshold
from curv2k.modules.second_kind.basis import traceless_dimension
from curv2k.settings import settings

EqualityCase = Literal["interior_one", "boundary_lambda1", "neither"]


class WitnessPayload(BaseModel):
    n: int = Field(..., description="Dimension")
    epsilon: str = Field(..., description="Excess over theta(n), exact")
    theta: str = Field(..., description="theta(n) + epsilon, exact")
    lambda_values: list[float] = Field(..., description="lambda^1 at the raised threshold, mean 1")
    f_value: str = Field(..., description="Exact f(lambda^1)")
    f_float: float = Field(..., description="f(lambda^1) as a float")
    is_witness: bool = Field(..., description="Whether f(lambda^1) < 0")


@dataclass(frozen=True)
class SharpnessWitness:
    n: int
    epsilon: Fraction
    theta: Fraction
    lambda_values: tuple[Fraction, ...]
    f_value: Fraction

    @property
    def is_witness(self) -> bool:
        return self.f_value < 0

    def to_payload(self) -> WitnessPayload:
        return WitnessPayload(
            n=self.n,
            epsilon=format_fraction(self.epsilon),
            theta=format_fraction(self.theta),
            lambda_values=[float(value) for value in self.lambda_values],
            f_value=format_fraction(self.f_value),
            f_float=float(self.f_value),
            is_witness=self.is_witness,
        )


def sharpness_witness(n: int, epsilon) -> SharpnessWitness:
    """lambda^1 at theta(n) + epsilon, evaluated exactly.

    Floats are converted to the exact binary fraction they hold, so tiny epsilons
    keep their sign. epsilon = 0 gives f = 0, which is not a witness.
    """
    epsilon = Fraction(epsilon)
    if epsilon < 0:
        raise InvalidParameterError(f"epsilon must be non-negative, got {epsilon}")
    raised = threshold(n).exact + epsilon
    point = candidate_lambda_m(n, raised, 1)
    return SharpnessWitness(
        n=n,
        epsilon=epsilon,
        theta=raised,
        lambda_values=point.lambda_values,
        f_value=point.f_value,
    )


def classify_equality(
    values: Sequence,
    n: int,
    theta=None,
    tolerance: float | None = None,
) -> EqualityCase:
    """Match a spectrum against the two equality cases after normalizing to mean 1 and sorting."""
    N = traceless_dimension(n)
    if len(values) != N:
        raise DimensionMismatchError(f"Expected N = {N} values for n = {n}, got {len(values)}")
    tolerance = settings.CLASSIFY_TOLERANCE if tolerance is None else tolerance
    theta = threshold(n).value if theta is None else float(theta)

    array = np.asarray([float(value) for value in values])
    mean = float(array.mean())
    if mean == 0.0:
        raise InvalidParameterError("Equality cases are stated for a positive mean; got mean = 0")
    normalized = np.sort(array / mean)

    if np.max(np.abs(normalized - 1.0)) <= tolerance:
        return "interior_one"
    boundary = np.full(N, (N + theta) / (N - 1))
    boundary[0] = -theta
    if np.max(np.abs(normalized - boundary)) <= tolerance:
        return "boundary_lambda1"
    return "neither"
