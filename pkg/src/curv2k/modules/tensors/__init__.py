from .algebra import (
    bianchi_project,
    exact_kulkarni_nomizu,
    exact_metric_square_norm_sq,
    exact_norm_sq,
    inner_product,
    kulkarni_nomizu,
    metric_square,
    norm_sq,
)
from .curvature_tensor import (
    CurvatureTensor,
    bianchi_residual,
    pair_symmetric_from_matrix,
    symmetry_residual,
    wedge_pairs,
)
from .decomposition import RiemannDecomposition, decompose, einstein_weyl, weyl_trace_residual
from .sym_tensor import SymTensor

__all__ = [
    "CurvatureTensor",
    "RiemannDecomposition",
    "SymTensor",
    "bianchi_project",
    "bianchi_residual",
    "decompose",
    "einstein_weyl",
    "exact_kulkarni_nomizu",
    "exact_metric_square_norm_sq",
    "exact_norm_sq",
    "inner_product",
    "kulkarni_nomizu",
    "metric_square",
    "norm_sq",
    "pair_symmetric_from_matrix",
    "symmetry_residual",
    "wedge_pairs",
    "weyl_trace_residual",
]
