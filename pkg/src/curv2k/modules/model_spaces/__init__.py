from .constructors import (
    complex_structure,
    constant_curvature,
    flat,
    fubini_study,
    product_spheres,
    random_einstein,
    required_radius,
)
from .specs import ModelSpec, build_model, parse_model_spec
from .splitmix import SplitMix64, mix64

__all__ = [
    "ModelSpec",
    "SplitMix64",
    "build_model",
    "complex_structure",
    "constant_curvature",
    "flat",
    "fubini_study",
    "mix64",
    "parse_model_spec",
    "product_spheres",
    "random_einstein",
    "required_radius",
]
