"""
🔍 BRUTE-FORCE ORACLE - Independent numerical search for the minimum of f

WHAT IT DOES:
Searches the feasible set {mean(lambda) = 1, lambda_j >= -theta} without using
any of the candidate algebra, then compares with the candidates.

HOW IT WORKS:
1. 🎲 Sample x = N t * Dirichlet(1) (uniform on the shifted simplex), lambda = x - theta
   - Samples come in chunks; chunk c draws from default_rng([seed, c])
   - Chunks may run on a thread pool; results are merged in chunk order
2. 📍 Inject every lambda^m so the boundary strata cannot be missed
3. 🪜 Refine the best samples by pairwise transfers (move mass from the
   coordinate with the largest gradient to the one with the smallest,
   backtracking until f decreases)
4. 🧾 Report the minimum, its argmin and how it compares with the candidates

Same seed, same budget, same report.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from numbers import Rational
from typing import Literal

import numpy as np
from pydantic import BaseModel, Field

from curv2k.core.exceptions import InvalidDimensionError, InvalidParameterError
from curv2k.modules.extremum.candidates import CandidatePayload, CandidatePoint, candidate_lambda_m
from curv2k.modules.extremum.sharpness import classify_equality
from curv2k.modules.extremum.threshold import format_fraction, theta as threshold
from curv2k.modules.identities.objective import f_coefficients, f_lambda_batch
from curv2k.modules.second_kind.basis import traceless_dimension
from curv2k.settings import settings

Conclusion = Literal["nonneg_min_attained", "counterexample_found"]


class ExtremumReport(BaseModel):
    """
    📋 EXTREMUM REPORT - What the oracle found next to what the candidates predict
    """

    n: int = Field(..., description="Dimension")
    N: int = Field(..., description="Number of eigenvalues")
    theta_used: str = Field(..., description="Pinning level, 'p/q' when exact")
    theta_float: float = Field(..., description="Pinning level as a float")
    candidate_values: list[float] = Field(..., description="f(lambda^m), m = 0 .. N-1")
    candidate_values_exact: list[str] | None = Field(None, description="Exact f(lambda^m) when theta is rational")
    candidate_min: float = Field(..., description="Smallest candidate value")
    candidates: list[CandidatePayload] = Field(..., description="Every lambda^m with its spectrum and f value")
    oracle_min: float = Field(..., description="Smallest f found by sampling, injection and refinement")
    oracle_argmin: list[float] = Field(..., description="Spectrum attaining oracle_min, ascending, mean 1")
    argmin_classification: str = Field(..., description="interior_one, boundary_lambda1 or neither")
    conclusion: Conclusion = Field(..., description="nonneg_min_attained or counterexample_found")
    equality_cases: list[str] = Field(..., description="Candidates where f vanishes")
    budget: int = Field(..., description="Number of random samples")
    seed: int = Field(..., description="Base seed")


class SimplexOracle:
    def __init__(
        self,
        n: int,
        theta=None,
        *,
        chunk_size: int | None = None,
        workers: int | None = None,
        refine_starts: int | None = None,
        refine_iterations: int | None = None,
        step_floor: float | None = None,
    ):
        if n < 4:
            raise InvalidDimensionError(f"The oracle needs n >= 4, got n = {n}")
        self.n = n
        self.N = traceless_dimension(n)
        if theta is None:
            theta = threshold(n).exact
        self.theta = Fraction(theta) if isinstance(theta, Rational) else float(theta)
        if self.theta < 0:
            raise InvalidParameterError(f"theta must be non-negative, got {self.theta}")
        self.theta_float = float(self.theta)
        self.chunk_size = chunk_size or settings.ORACLE_CHUNK_SIZE
        self.workers = workers or settings.ORACLE_WORKERS
        self.refine_starts = settings.ORACLE_REFINE_STARTS if refine_starts is None else refine_starts
        self.refine_iterations = settings.ORACLE_REFINE_ITERATIONS if refine_iterations is None else refine_iterations
        self.step_floor = settings.ORACLE_STEP_FLOOR if step_floor is None else step_floor
        self.c3, self.c2, self.c1 = (float(c) for c in f_coefficients(n, self.theta_float))
        self.logger = logging.getLogger(__name__)

    def _f(self, x: np.ndarray) -> float:
        return float(f_lambda_batch((x - self.theta_float)[None, :], self.n, self.theta_float)[0])

    def _sample_chunk(self, seed: int, index: int, size: int) -> list[tuple[float, int, int, np.ndarray]]:
        """Best samples of one chunk as (f, chunk, row, x)."""
        rng = np.random.default_rng([seed, index])
        total = self.N * (1.0 + self.theta_float)
        x = total * rng.dirichlet(np.ones(self.N), size=size)
        values = f_lambda_batch(x - self.theta_float, self.n, self.theta_float)

        keep = max(1, min(self.refine_starts, size))
        best = np.argpartition(values, keep - 1)[:keep] if keep < size else np.arange(size)
        return [(float(values[row]), index, int(row), x[row].copy()) for row in best]

    def _refine(self, x: np.ndarray) -> tuple[float, np.ndarray]:
        """Pairwise transfer descent on the shifted simplex; the sum of x is preserved."""
        x = x.copy()
        value = self._f(x)
        mean = 1.0
        previous = float(np.max(x))

        for _ in range(self.refine_iterations):
            lam = x - self.theta_float
            gradient = 2.0 * self.c2 * mean * lam + 3.0 * self.c1 * lam**2
            receiver = int(np.argmin(gradient))
            movable = np.where(x > self.step_floor)[0]
            if movable.size == 0:
                break
            donor = int(movable[np.argmax(gradient[movable])])
            if donor == receiver or gradient[donor] - gradient[receiver] <= 0.0:
                break

            step = min(x[donor], 2.0 * previous)
            improved = False
            while step >= self.step_floor:
                trial = x.copy()
                trial[donor] -= step
                trial[receiver] += step
                trial_value = self._f(trial)
                if trial_value < value:
                    x, value, previous, improved = trial, trial_value, step, True
                    break
                step *= 0.5
            if not improved:
                break
        return value, x

    def _candidates(self) -> list[CandidatePoint]:
        return [candidate_lambda_m(self.n, self.theta, m) for m in range(self.N)]

    def run(self, budget: int | None = None, seed: int | None = None) -> ExtremumReport:
        budget = settings.ORACLE_BUDGET if budget is None else budget
        seed = settings.SEED if seed is None else seed
        if budget < 1:
            raise InvalidParameterError(f"budget must be at least 1, got {budget}")
        if seed < 0:
            raise InvalidParameterError(f"seed must be non-negative, got {seed}")

        sizes = [min(self.chunk_size, budget - start) for start in range(0, budget, self.chunk_size)]
        self.logger.info(f"Sampling {budget} points for n = {self.n} in {len(sizes)} chunks (seed {seed})")

        def _chunk(index: int):
            return self._sample_chunk(seed, index, sizes[index])

        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as executor:
                chunks = list(executor.map(_chunk, range(len(sizes))))
        else:
            chunks = [_chunk(index) for index in range(len(sizes))]

        pool = sorted((entry for chunk in chunks for entry in chunk), key=lambda entry: entry[:3])
        starts = pool[: self.refine_starts]
        self.logger.info(f"Refining {len(starts)} starts, best raw sample f = {pool[0][0]:.6g}")

        # (value, source order, x); candidates rank first on ties
        best: tuple[float, int, np.ndarray] | None = None
        candidates = self._candidates()
        for order, point in enumerate(candidates):
            x = np.asarray([float(value) for value in point.shifted])
            entry = (float(point.f_value), order, x)
            if best is None or entry[:2] < best[:2]:
                best = entry
        for order, (raw_value, _, _, x) in enumerate(starts, start=len(candidates)):
            refined_value, refined_x = self._refine(x)
            entry = (min(refined_value, raw_value), order, refined_x if refined_value <= raw_value else x)
            if entry[:2] < best[:2]:
                best = entry

        oracle_min, _, argmin_x = best
        argmin = np.sort(argmin_x - self.theta_float)
        candidate_values = [float(point.f_value) for point in candidates]
        exact = all(point.exact for point in candidates)
        conclusion: Conclusion = (
            "counterexample_found" if oracle_min < -settings.ORACLE_TOLERANCE else "nonneg_min_attained"
        )
        if exact:
            equality_cases = [point.label for point in candidates if point.f_value == 0]
        else:
            equality_cases = [
                point.label for point in candidates if abs(float(point.f_value)) <= settings.ORACLE_TOLERANCE
            ]

        self.logger.info(f"Oracle minimum {oracle_min:.6g} for n = {self.n}: {conclusion}")
        return ExtremumReport(
            n=self.n,
            N=self.N,
            theta_used=format_fraction(self.theta) if isinstance(self.theta, Fraction) else repr(self.theta_float),
            theta_float=self.theta_float,
            candidate_values=candidate_values,
            candidate_values_exact=[format_fraction(point.f_value) for point in candidates] if exact else None,
            candidate_min=min(candidate_values),
            candidates=[point.to_payload() for point in candidates],
            oracle_min=oracle_min,
            oracle_argmin=[float(value) for value in argmin],
            argmin_classification=classify_equality(
                argmin, self.n, self.theta_float, tolerance=settings.ARGMIN_TOLERANCE
            ),
            conclusion=conclusion,
            equality_cases=equality_cases,
            budget=budget,
            seed=seed,
        )


def brute_force_min(n: int, theta=None, budget: int | None = None, seed: int | None = None, **kwargs) -> ExtremumReport:
    """Run a SimplexOracle once; keyword arguments tune chunking, threads and refinement."""
    return SimplexOracle(n, theta, **kwargs).run(budget, seed)
