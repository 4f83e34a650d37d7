"""
🎯 THE THRESHOLD theta(n) - Lower-bound constant for the second-kind spectrum

theta(n) = 3(N-1)(N+1-n) / ((N-1)(N-3) + 3n(N-2)) - 1,   N = (n-1)(n+2)/2

Computed in exact rational arithmetic. It is positive from n = 4 on, increases
with n and tends to 2.

The condition it controls is lambda_1 >= -theta(n) * mean.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal

from pydantic import BaseModel, Field

from curv2k.core.exceptions import DimensionMismatchError, InvalidDimensionError
from curv2k.modules.second_kind.basis import traceless_dimension
from curv2k.modules.second_kind.spectral import Spectrum
from curv2k.settings import settings


def format_fraction(value: Fraction) -> str:
    """'p/q', or 'p' for integers."""
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


class ThresholdPayload(BaseModel):
    n: int = Field(..., description="Dimension")
    N: int = Field(..., description="(n-1)(n+2)/2")
    theta: str = Field(..., description="Exact threshold as 'p/q'")
    theta_float: float = Field(..., description="Nearest float to the threshold")


@dataclass(frozen=True)
class Threshold:
    n: int
    N: int
    exact: Fraction

    @property
    def value(self) -> float:
        return float(self.exact)

    def to_payload(self) -> ThresholdPayload:
        return ThresholdPayload(n=self.n, N=self.N, theta=format_fraction(self.exact), theta_float=self.value)


@lru_cache
def theta(n: int) -> Threshold:
    if n < 4:
        raise InvalidDimensionError(f"theta(n) is defined for n >= 4, got n = {n}")
    N = traceless_dimension(n)
    # Fraction keeps the value exact: theta(4) = 1/11, theta(5) = 67/323
    exact = Fraction(3 * (N - 1) * (N + 1 - n), (N - 1) * (N - 3) + 3 * n * (N - 2)) - 1
    return Threshold(n=n, N=N, exact=exact)


ConditionStatus = Literal["holds", "violated", "flat_like"]


class ConditionReport(BaseModel):
    """Outcome of testing lambda_1 >= -theta * mean."""

    status: ConditionStatus = Field(..., description="holds, violated or flat_like")
    theta: float = Field(..., description="Threshold used")
    ratio: float | None = Field(None, description="lambda_1 / mean; undefined when flat-like")
    margin: float | None = Field(None, description="(lambda_1 + theta * mean) / |mean|")


def check_condition(spectrum: Spectrum, n: int | None = None, theta_value=None) -> ConditionReport:
    n = spectrum.n if n is None else n
    if n != spectrum.n:
        raise DimensionMismatchError(f"Spectrum is for n = {spectrum.n}, not n = {n}")
    value = theta(n).value if theta_value is None else float(theta_value)

    # Mean ~ 0: the ratio is meaningless, only the sign of lambda_1 matters
    if spectrum.is_flat_like():
        zero = spectrum.minimum >= -settings.FLAT_TOLERANCE * spectrum.matrix_norm
        return ConditionReport(status="flat_like" if zero else "violated", theta=value)

    mean = spectrum.mean
    # Same sign as lambda_1 + theta * mean; unchanged when R is scaled by c > 0
    margin = (spectrum.minimum + value * mean) / abs(mean)
    return ConditionReport(
        status="holds" if margin >= 0.0 else "violated",
        theta=value,
        ratio=spectrum.minimum / mean,
        margin=margin,
    )
