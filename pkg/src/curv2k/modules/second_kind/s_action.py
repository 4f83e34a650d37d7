"""
✳️ S-ACTION - Symmetric two-tensors acting on (0,4) tensors slot by slot

DEFINITION:
(S T)(X1, X2, X3, X4) = T(S X1, X2, X3, X4) + ... + T(X1, X2, X3, S X4)

For the Weyl tensor W and the eigentensors S^j of R-ring the norms |S^j W|^2
enter the estimate for sum_j lambda_j |S^j W|^2. Individual norms depend on
the eigenbasis inside degenerate eigenspaces; the sums
- sum_j |S^j W|^2 = tr(G)
- sum_j lambda_j |S^j W|^2 = tr(M G)
do not, where G_ab = <S^a W, S^b W> over the fixed traceless basis.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from curv2k.core.exceptions import DegenerateEigenspaceError, DimensionMismatchError
from curv2k.modules.second_kind.basis import TracelessBasis, traceless_basis
from curv2k.modules.second_kind.operator import second_kind_matrix
from curv2k.modules.second_kind.spectral import Spectrum, spectrum
from curv2k.modules.tensors.curvature_tensor import CurvatureTensor
from curv2k.modules.tensors.decomposition import decompose
from curv2k.modules.tensors.sym_tensor import SymTensor

logger = logging.getLogger(__name__)


def _rank4(tensor) -> np.ndarray:
    entries = np.asarray(tensor.entries if isinstance(tensor, CurvatureTensor) else tensor, dtype=float)
    if entries.ndim != 4 or len(set(entries.shape)) != 1:
        raise DimensionMismatchError(f"Expected an n x n x n x n tensor, got shape {entries.shape}")
    return entries


def _act(s: np.ndarray, t: np.ndarray) -> np.ndarray:
    return (
        np.einsum("ip,pjkl->ijkl", s, t)
        + np.einsum("jp,ipkl->ijkl", s, t)
        + np.einsum("kp,ijpl->ijkl", s, t)
        + np.einsum("lp,ijkp->ijkl", s, t)
    )


def s_action(s: SymTensor, tensor) -> np.ndarray:
    """(S T)_ijkl = sum_p (S_ip T_pjkl + S_jp T_ipkl + S_kp T_ijpl + S_lp T_ijkp)."""
    t = _rank4(tensor)
    if s.n != t.shape[0]:
        raise DimensionMismatchError(f"S-action operands differ in dimension: {s.n} vs {t.shape[0]}")
    return _act(s.entries, t)


def s2_action_tensor(tensor, basis: TracelessBasis | None = None) -> np.ndarray:
    """Components of T^{S^2_0} = sum_a S^a T (x) S^a.

    Returns the stack of S^a T with shape (N, n, n, n, n); since {S^a} is
    orthonormal, |T^{S^2_0}|^2 is the sum of the squared norms of the stack.
    """
    t = _rank4(tensor)
    basis = traceless_basis(t.shape[0]) if basis is None else basis
    if basis.n != t.shape[0]:
        raise DimensionMismatchError(f"Basis is for n = {basis.n}, tensor has n = {t.shape[0]}")
    stacked = basis.stacked
    return (
        np.einsum("aip,pjkl->aijkl", stacked, t)
        + np.einsum("ajp,ipkl->aijkl", stacked, t)
        + np.einsum("akp,ijpl->aijkl", stacked, t)
        + np.einsum("alp,ijkp->aijkl", stacked, t)
    )


def weyl_gram(weyl, basis: TracelessBasis | None = None) -> np.ndarray:
    """G_ab = <S^a W, S^b W> under the unweighted (0,4) contraction."""
    images = s2_action_tensor(weyl, basis)
    flat = images.reshape(images.shape[0], -1)
    gram = flat @ flat.T
    return 0.5 * (gram + gram.T)


@dataclass(frozen=True, eq=False)
class SJWNorms:
    """|S^j W|^2 aligned with the ascending eigenvalues, plus basis-free aggregates."""

    values: np.ndarray
    total: float
    weighted: float
    degenerate: bool
    spectrum: Spectrum


def sjw_norms(
    tensor: CurvatureTensor,
    basis: TracelessBasis | None = None,
    *,
    require_individual: bool = False,
) -> SJWNorms:
    basis = traceless_basis(tensor.n) if basis is None else basis
    op = second_kind_matrix(tensor, basis)
    spec = spectrum(op)
    weyl = decompose(tensor).weyl

    gram = weyl_gram(weyl, basis)
    vectors = spec.eigenvectors
    values = np.einsum("aj,ab,bj->j", vectors, gram, vectors)
    values = np.maximum(values, 0.0)

    degenerate = spec.is_degenerate()
    if degenerate:
        if require_individual:
            raise DegenerateEigenspaceError(
                "Individual |S^j W|^2 depend on the eigenbasis: the spectrum has a repeated eigenvalue"
            )
        logger.info(f"Degenerate spectrum for n = {tensor.n}: only the aggregates of |S^j W|^2 are basis-free")

    return SJWNorms(
        values=values,
        total=float(np.trace(gram)),
        weighted=float(np.sum(op.matrix * gram)),
        degenerate=degenerate,
        spectrum=spec,
    )


def weighted_weyl_sum(tensor: CurvatureTensor) -> float:
    """sum_j lambda_j |S^j W|^2 = tr(M G), independent of the eigenbasis."""
    basis = traceless_basis(tensor.n)
    op = second_kind_matrix(tensor, basis)
    gram = weyl_gram(decompose(tensor).weyl, basis)
    return float(np.sum(op.matrix * gram))
