"""
📍 CANDIDATE MINIMIZERS - Where the cubic f can reach its minimum on the constrained simplex

THE PROBLEM:
Minimize f(lambda) subject to mean(lambda) = 1 and lambda_j >= -theta.

SHIFTED COORDINATES:
x = lambda + theta lives on the simplex sum x = N t, x >= 0, t = 1 + theta, and
    f(lambda) = C(n, t) + 3n F(x),   F(x) = sum x^3 + q(t) sum x^2
with q(t) = [3(N+1-n) - (N-3+9n) t] / (3n). This holds for every theta.

THE CANDIDATES:
🔹 lambda^m - m entries pinned at -theta, the rest equal to (N + m theta)/(N - m)
🔸 P_{k,l}  - Lagrange points of F: N-k zeros, l entries at a, k-l entries at b,
             a + b = -2q/3 (so 3a^2 + 2qa = 3b^2 + 2qb)

Rational theta keeps every value exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from pydantic import BaseModel, Field

from curv2k.core.exceptions import DimensionMismatchError, InvalidParameterError
from curv2k.modules.extremum.threshold import format_fraction, theta as threshold
from curv2k.modules.identities.objective import f_coefficients, f_lambda
from curv2k.modules.second_kind.basis import traceless_dimension


def _as_number(value):
    """Keep rationals exact, everything else becomes a float."""
    return Fraction(value) if isinstance(value, Rational) else float(value)


def _render(value) -> str:
    return format_fraction(value) if isinstance(value, Fraction) else repr(float(value))


class CandidatePayload(BaseModel):
    label: str = Field(..., description="lambda^m or P_{k,l}")
    m: int | None = Field(None, description="Entries pinned at -theta")
    k: int | None = Field(None, description="Positive shifted coordinates")
    l: int | None = Field(None, description="Shifted coordinates at the lower level a")
    lambda_values: list[float] = Field(..., description="Eigenvalue vector with mean 1")
    f_value: float = Field(..., description="f at the candidate")
    f_exact: str | None = Field(None, description="Exact f as 'p/q' when theta is rational")


@dataclass(frozen=True)
class CandidatePoint:
    n: int
    theta: Fraction | float
    lambda_values: tuple
    f_value: Fraction | float
    m: int | None = None
    k: int | None = None
    l: int | None = None

    @property
    def exact(self) -> bool:
        return isinstance(self.f_value, Fraction)

    @property
    def label(self) -> str:
        return f"lambda^{self.m}" if self.m is not None else f"P_{{{self.k},{self.l}}}"

    @property
    def shifted(self) -> tuple:
        """x = lambda + theta."""
        return tuple(value + self.theta for value in self.lambda_values)

    def to_payload(self) -> CandidatePayload:
        return CandidatePayload(
            label=self.label,
            m=self.m,
            k=self.k,
            l=self.l,
            lambda_values=[float(value) for value in self.lambda_values],
            f_value=float(self.f_value),
            f_exact=format_fraction(self.f_value) if self.exact else None,
        )


def _check_m(n: int, m: int) -> int:
    N = traceless_dimension(n)
    if not 0 <= m <= N - 1:
        raise InvalidParameterError(f"m must lie in [0, {N - 1}] for n = {n}, got m = {m}")
    return N


def candidate_lambda_m(n: int, theta, m: int) -> CandidatePoint:
    N = _check_m(n, m)
    theta = _as_number(theta)
    # m entries at the lower bound, the remaining N - m share what keeps sum = N
    upper = (N + m * theta) / (N - m)
    values = tuple([-theta] * m + [upper] * (N - m))
    return CandidatePoint(n=n, theta=theta, lambda_values=values, f_value=f_lambda(values, n, theta), m=m)


def f_lambda_m_closed_form(n: int, theta, m: int):
    """f(lambda^m) / mean^3 = (m N t^2 / (N-m)) [3(N+1-n) - (N-3 + 3n(N-2m)/(N-m)) t]."""
    N = _check_m(n, m)
    t = 1 + _as_number(theta)
    bracket = 3 * (N + 1 - n) - (N - 3) * t - 3 * n * (N - 2 * m) * t / (N - m)
    return m * N * t * t / (N - m) * bracket


def shifted_sums(n: int, theta, m: int) -> tuple:
    """(sum lambda^2, sum lambda^3) at lambda^m in closed form."""
    N = _check_m(n, m)
    t = 1 + _as_number(theta)
    # Expanded around the constant vector, whose sums are both N
    sum_sq = N + N * m * t * t / (N - m)
    sum_cube = N + 3 * m * N * t * t / (N - m) - m * t**3 * N * (N - 2 * m) / (N - m) ** 2
    return sum_sq, sum_cube


def quadratic_coefficient(n: int, theta):
    """q(t) = [3(N+1-n) - (N-3+9n) t] / (3n)."""
    N = traceless_dimension(n)
    t = 1 + _as_number(theta)
    return (3 * (N + 1 - n) - (N - 3 + 9 * n) * t) / (3 * n)


def shift_constant(n: int, theta):
    """C(n, t) = f(lambda) - 3n F(x) for mean-one lambda."""
    N = traceless_dimension(n)
    theta = _as_number(theta)
    t = 1 + theta
    c3, c2, _ = f_coefficients(n, theta)
    return c3 + c2 * (-2 * N * t * theta + N * theta * theta) + 3 * n * N * theta * theta * (2 * t + 1)


def shifted_objective(x: Sequence, n: int, theta):
    """F(x) = sum x^3 + q(t) sum x^2."""
    N = traceless_dimension(n)
    if len(x) != N:
        raise DimensionMismatchError(f"F needs N = {N} coordinates for n = {n}, got {len(x)}")
    q = quadratic_coefficient(n, theta)
    if isinstance(q, Fraction) and all(isinstance(value, Rational) for value in x):
        x = [Fraction(value) for value in x]
        return sum((value**3 for value in x), Fraction(0)) + q * sum((value**2 for value in x), Fraction(0))
    x = [float(value) for value in x]
    return sum(value**3 for value in x) + float(q) * sum(value**2 for value in x)


def _from_shifted(n: int, theta, x: list, k: int, l: int) -> CandidatePoint:
    values = tuple(value - theta for value in x)
    return CandidatePoint(n=n, theta=theta, lambda_values=values, f_value=f_lambda(values, n, theta), k=k, l=l)


def lagrange_candidates(n: int, theta, k: int, l: int) -> CandidatePoint | None:
    """
    🧮 LAGRANGE POINT P_{k,l} - Critical point of F with k positive shifted coordinates

    Args:
        n: dimension
        theta: pinning level (rational for exact output)
        k: number of positive shifted coordinates, 1 <= k <= N
        l: entries at the lower level a, 0 <= l <= k/2

    Returns:
        The candidate, or None when the split is infeasible (a or b negative)
        or when l = k/2 does not sit on the degenerate line a + b = 2Nt/k
    """
    N = traceless_dimension(n)
    if not 1 <= k <= N:
        raise InvalidParameterError(f"k must lie in [1, {N}] for n = {n}, got k = {k}")
    if not 0 <= 2 * l <= k:
        raise InvalidParameterError(f"l must lie in [0, k/2] = [0, {k / 2}], got l = {l}")

    theta = _as_number(theta)
    t = 1 + theta
    # theta * 0 is Fraction(0) or 0.0, matching the arithmetic of theta
    zeros = [theta * 0] * (N - k)

    # One level only: the k positive coordinates carry the whole sum N t
    if l == 0:
        b = N * t / k
        return _from_shifted(n, theta, [b] * k + zeros, k, l)

    # a + b = 2 A t
    A = -quadratic_coefficient(n, theta) / (3 * t)
    if 2 * l == k:
        if A * k != N:
            return None
        return _from_shifted(n, theta, [A * t] * k + zeros, k, l)

    # l a + (k - l) b = N t together with a + b = 2 A t
    B = (N - A * k) / (k - 2 * l)
    a, b = (A - B) * t, (A + B) * t
    if a < 0 or b < 0:
        return None
    return _from_shifted(n, theta, [a] * l + [b] * (k - l) + zeros, k, l)


def degenerate_split_theta(n: int, k: int) -> Fraction:
    """theta at which every l = k/2 split with a + b = 2Nt/k is critical (F constant along it).

    Needs k even with 9nN/(N-3+9n) < k <= N.
    """
    N = traceless_dimension(n)
    if k % 2 or not 1 <= k <= N:
        raise InvalidParameterError(f"k must be even and lie in [1, {N}], got k = {k}")
    denominator = Fraction(N - 3 + 9 * n) - Fraction(9 * n * N, k)
    if denominator <= 0:
        raise InvalidParameterError(f"No degenerate split for k = {k}: need k > {Fraction(9 * n * N, N - 3 + 9 * n)}")
    value = Fraction(3 * (N + 1 - n)) / denominator - 1
    if value < 0:
        raise InvalidParameterError(f"Degenerate split for k = {k} needs theta = {value} < 0")
    return value


def split_point(n: int, theta, k: int, a) -> list:
    """Shifted point with k/2 entries at a, k/2 at 2Nt/k - a and N-k zeros."""
    N = traceless_dimension(n)
    theta = _as_number(theta)
    total = 2 * N * (1 + theta) / k
    half = k // 2
    return [a] * half + [total - a] * half + [theta * 0] * (N - k)


class CandidateCertificate(BaseModel):
    n: int = Field(..., description="Dimension")
    theta: str = Field(..., description="Threshold used, as 'p/q'")
    values: list[str] = Field(..., description="Exact f(lambda^m), m = 0 .. N-1")
    zero_at: list[int] = Field(..., description="m with f(lambda^m) = 0")
    positive_beyond_one: bool = Field(..., description="f(lambda^m) > 0 for every m >= 2")
    certified: bool = Field(..., description="f(lambda^0) = f(lambda^1) = 0 and the rest positive")


def certify_candidates(n: int, theta=None) -> CandidateCertificate:
    """Exact sign certificate for the lambda^m family (theta defaults to theta(n))."""
    theta = threshold(n).exact if theta is None else Fraction(theta)
    N = traceless_dimension(n)
    values = [candidate_lambda_m(n, theta, m).f_value for m in range(N)]
    # Rational theta: the sign tests below are exact
    zero_at = [m for m, value in enumerate(values) if value == 0]
    positive = all(value > 0 for value in values[2:])
    return CandidateCertificate(
        n=n,
        theta=format_fraction(theta),
        values=[_render(value) for value in values],
        zero_at=zero_at,
        positive_beyond_one=positive,
        certified=positive and values[0] == 0 and values[1] == 0,
    )
