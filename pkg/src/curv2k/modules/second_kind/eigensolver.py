"""
🔄 CYCLIC JACOBI EIGENSOLVER - Dense symmetric diagonalization by plane rotations

HOW IT WORKS:
1. Copy the matrix into a private working array
2. Sweep over every (p, q) pair above the diagonal in round-robin order:
   each round holds disjoint pairs, so its rotations commute and are applied
   together as one orthogonal matrix J (A <- J^T A J, V <- V J)
3. Leave pairs whose |a_pq| is already negligible alone (threshold Jacobi)
4. Stop once the off-diagonal Frobenius mass falls below tol * ||M||_F
5. Sort the eigenvalues, reorder the eigenvectors, check the reconstruction

The input is never modified; every call is independent.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from curv2k.core.exceptions import ConvergenceError, DimensionMismatchError
from curv2k.settings import settings


@dataclass(frozen=True)
class EigenDecomposition:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int


@lru_cache(maxsize=64)
def rotation_rounds(size: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """
    Round-robin schedule: every pair p < q exactly once per sweep, pairs inside a round disjoint.

    Circle method: keep the first index fixed and rotate the rest; an odd size gets a bye (-1).
    """
    players = list(range(size)) + ([-1] if size % 2 else [])
    count = len(players)
    rounds = []
    for _ in range(count - 1):
        pairs = [
            (min(players[i], players[count - 1 - i]), max(players[i], players[count - 1 - i]))
            for i in range(count // 2)
            if players[i] >= 0 and players[count - 1 - i] >= 0
        ]
        if pairs:
            p, q = zip(*pairs)
            rounds.append((np.array(p, dtype=int), np.array(q, dtype=int)))
        players = [players[0], players[-1], *players[1:-1]]
    return tuple(rounds)


class JacobiEigensolver:
    def __init__(
        self,
        tolerance: float | None = None,
        max_sweeps: int | None = None,
        reconstruction_tolerance: float | None = None,
    ):
        self.tolerance = settings.JACOBI_TOLERANCE if tolerance is None else tolerance
        self.max_sweeps = settings.JACOBI_MAX_SWEEPS if max_sweeps is None else max_sweeps
        self.reconstruction_tolerance = (
            settings.RECONSTRUCTION_TOLERANCE if reconstruction_tolerance is None else reconstruction_tolerance
        )
        self.logger = logging.getLogger(__name__)

    @staticmethod
    def _off_diagonal_norm(a: np.ndarray) -> float:
        off = a - np.diag(np.diag(a))
        return float(np.sqrt(np.sum(off * off)))

    @staticmethod
    def _rotate_round(a: np.ndarray, v: np.ndarray, p: np.ndarray, q: np.ndarray, skip_below: float):
        """Zero a_pq for every active pair of one round; returns the updated (a, v)."""
        apq = a[p, q]
        active = np.abs(apq) > skip_below
        if not np.any(active):
            return a, v
        p, q, apq = p[active], q[active], apq[active]

        theta = (a[q, q] - a[p, p]) / (2.0 * apq)
        sign = np.where(theta >= 0.0, 1.0, -1.0)
        huge = np.abs(theta) > 1e150
        # theta^2 overflows past 1e154; there t ~ 1 / (2 theta)
        safe = np.where(huge, 0.0, theta)
        t = np.where(huge, 0.5 / np.where(huge, theta, 1.0), sign / (np.abs(safe) + np.sqrt(safe * safe + 1.0)))
        c = 1.0 / np.sqrt(t * t + 1.0)
        s = t * c

        rotation = np.eye(a.shape[0])
        rotation[p, p] = c
        rotation[q, q] = c
        rotation[p, q] = s
        rotation[q, p] = -s

        a = rotation.T @ a @ rotation
        a[p, q] = 0.0
        a[q, p] = 0.0
        return a, v @ rotation

    def solve(self, matrix: np.ndarray) -> EigenDecomposition:
        """Diagonalize a symmetric matrix; eigenvalues ascending, eigenvectors as columns."""
        original = np.asarray(matrix, dtype=float)
        if original.ndim != 2 or original.shape[0] != original.shape[1]:
            raise DimensionMismatchError(f"Jacobi needs a square matrix, got shape {original.shape}")

        size = original.shape[0]
        a = 0.5 * (original + original.T)
        v = np.eye(size)
        scale = float(np.linalg.norm(a))
        threshold = self.tolerance * scale
        # if every entry is below this, the off-diagonal mass is below threshold
        skip_below = threshold / max(size, 1)

        sweeps = 0
        off_mass = self._off_diagonal_norm(a)
        while off_mass > threshold:
            if sweeps >= self.max_sweeps:
                raise ConvergenceError(
                    f"Jacobi did not converge in {self.max_sweeps} sweeps (off-diagonal mass {off_mass:.3e})"
                )
            for p, q in rotation_rounds(size):
                a, v = self._rotate_round(a, v, p, q, skip_below)
            sweeps += 1
            off_mass = self._off_diagonal_norm(a)
            self.logger.debug("Jacobi sweep %d: off-diagonal mass %.3e", sweeps, off_mass)

        eigenvalues = np.diag(a).copy()
        order = np.argsort(eigenvalues, kind="stable")
        eigenvalues = eigenvalues[order]
        eigenvectors = v[:, order]

        reference = float(np.max(np.abs(original))) if size else 0.0
        if reference > 0.0:
            residual = float(np.max(np.abs(eigenvectors @ np.diag(eigenvalues) @ eigenvectors.T - original)))
            if residual > self.reconstruction_tolerance * reference:
                raise ConvergenceError(f"Eigen-reconstruction residual {residual:.3e} exceeds tolerance")

        return EigenDecomposition(eigenvalues=eigenvalues, eigenvectors=eigenvectors, sweeps=sweeps)


def jacobi_eigh(matrix: np.ndarray, **kwargs) -> tuple[np.ndarray, np.ndarray]:
    """Functional shortcut: (eigenvalues ascending, eigenvectors as columns)."""
    result = JacobiEigensolver(**kwargs).solve(matrix)
    return result.eigenvalues, result.eigenvectors
