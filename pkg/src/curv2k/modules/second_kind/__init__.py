from .basis import TracelessBasis, traceless_basis, traceless_dimension
from .eigensolver import EigenDecomposition, JacobiEigensolver, jacobi_eigh, rotation_rounds
from .operator import SecondKindOperator, rbar_apply, second_kind_matrix
from .s_action import SJWNorms, s2_action_tensor, s_action, sjw_norms, weighted_weyl_sum, weyl_gram
from .spectral import Spectrum, SpectrumPayload, spectrum

__all__ = [
    "EigenDecomposition",
    "JacobiEigensolver",
    "SJWNorms",
    "SecondKindOperator",
    "Spectrum",
    "SpectrumPayload",
    "TracelessBasis",
    "jacobi_eigh",
    "rbar_apply",
    "rotation_rounds",
    "s2_action_tensor",
    "s_action",
    "second_kind_matrix",
    "sjw_norms",
    "spectrum",
    "traceless_basis",
    "traceless_dimension",
    "weighted_weyl_sum",
    "weyl_gram",
]
