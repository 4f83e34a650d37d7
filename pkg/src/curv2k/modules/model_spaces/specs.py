from __future__ import annotations

import logging
from typing import Literal

from pydantic import BaseModel, Field

from curv2k.core.exceptions import Curv2kError, ModelSpecError
from curv2k.modules.model_spaces.constructors import (
    constant_curvature,
    flat,
    fubini_study,
    product_spheres,
    random_einstein,
)
from curv2k.modules.tensors.curvature_tensor import CurvatureTensor
from curv2k.settings import settings

logger = logging.getLogger(__name__)

Kind = Literal["constant_curvature", "flat", "product_spheres", "fubini_study", "random_einstein"]

# spec name -> (kind, allowed keys, defaults)
SPEC_GRAMMAR: dict[str, tuple[Kind, set[str], dict[str, float]]] = {
    "sphere": ("constant_curvature", {"n", "k"}, {"k": 1.0}),
    "flat": ("flat", {"n"}, {}),
    "s2xs2": ("product_spheres", set(), {"p": 2, "q": 2, "r1": 1.0, "r2": 1.0}),
    "products": ("product_spheres", {"p", "q", "r1", "r2"}, {"r1": 1.0}),
    "cpm": ("fubini_study", {"m", "c"}, {"c": 4.0}),
    "random": ("random_einstein", {"n", "seed", "amp"}, {"seed": 0}),
}
REQUIRED = {"sphere": {"n"}, "flat": {"n"}, "products": {"p", "q"}, "cpm": {"m"}, "random": {"n"}}
INTEGER_KEYS = {"n", "p", "q", "m", "seed"}


class ModelSpec(BaseModel):
    """
    🗺️ MODEL SPECIFICATION - A named model space and its parameters

    Parsed from strings such as "sphere:n=4,k=1", "flat:n=4", "s2xs2",
    "products:p=2,q=3,r1=1", "cpm:m=2,c=4" or "random:n=5,seed=7,amp=1".
    """

    name: str = Field(..., description="Spec name as written (sphere, flat, s2xs2, products, cpm, random)")
    kind: Kind = Field(..., description="Constructor the spec dispatches to")
    n: int = Field(..., description="Dimension of the resulting tensor")
    params: dict[str, float] = Field(default_factory=dict, description="Kind-specific parameters")

    @property
    def is_symmetric_space(self) -> bool:
        return self.kind != "random_einstein"

    @property
    def label(self) -> str:
        if not self.params or self.name == "s2xs2":
            return self.name
        rendered = ",".join(f"{key}={_render(value)}" for key, value in self.params.items())
        return f"{self.name}:{rendered}"


def _render(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else repr(float(value))


def _parse_value(key: str, raw: str) -> float:
    try:
        value = float(raw)
    except ValueError as e:
        raise ModelSpecError(f"Parameter {key} needs a number, got '{raw}'") from e
    if key in INTEGER_KEYS:
        if not value.is_integer():
            raise ModelSpecError(f"Parameter {key} needs an integer, got '{raw}'")
        return int(value)
    return value


def parse_model_spec(text: str) -> ModelSpec:
    name, _, rest = text.strip().partition(":")
    name = name.strip().lower()
    if name not in SPEC_GRAMMAR:
        raise ModelSpecError(f"Unknown model '{name}'; expected one of {', '.join(SPEC_GRAMMAR)}")
    kind, allowed, defaults = SPEC_GRAMMAR[name]

    params: dict[str, float] = {}
    for item in filter(None, (part.strip() for part in rest.split(","))):
        key, sep, raw = item.partition("=")
        key = key.strip()
        if not sep:
            raise ModelSpecError(f"Expected key=value in '{text}', got '{item}'")
        if key not in allowed:
            raise ModelSpecError(f"Model '{name}' does not take '{key}'; allowed: {', '.join(sorted(allowed)) or 'none'}")
        if key in params:
            raise ModelSpecError(f"Parameter {key} given twice in '{text}'")
        params[key] = _parse_value(key, raw.strip())

    missing = REQUIRED.get(name, set()) - params.keys()
    if missing:
        raise ModelSpecError(f"Model '{name}' needs {', '.join(sorted(missing))}")
    params = {**defaults, **params}

    if kind == "product_spheres":
        n = params["p"] + params["q"]
    elif kind == "fubini_study":
        n = 2 * params["m"]
    else:
        n = params["n"]
    return ModelSpec(name=name, kind=kind, n=int(n), params=params)


def build_model(spec: ModelSpec | str) -> CurvatureTensor:
    """Construct the tensor a spec names; constructor failures become ModelSpecError."""
    spec = parse_model_spec(spec) if isinstance(spec, str) else spec
    params = spec.params
    try:
        if spec.kind == "constant_curvature":
            tensor = constant_curvature(spec.n, params.get("k", 1.0))
        elif spec.kind == "flat":
            tensor = flat(spec.n)
        elif spec.kind == "product_spheres":
            tensor = product_spheres(int(params["p"]), int(params["q"]), params.get("r1", 1.0), params.get("r2"))
        elif spec.kind == "fubini_study":
            tensor = fubini_study(int(params["m"]), params.get("c", 4.0))
        else:
            tensor = random_einstein(
                spec.n, int(params.get("seed", 0)), params.get("amp", settings.DEFAULT_WEYL_AMPLITUDE)
            )
    except Curv2kError as e:
        raise ModelSpecError(f"Cannot build '{spec.label}': {str(e)}") from e

    logger.info(f"Built model {spec.label} (n = {spec.n})")
    return tensor
