"""Loading of surface descriptions from YAML or JSON files, like:

```yaml
name: my-helicoid
family: helicoid
params: {c5: 2.0, lam: 1.0}
domain: [[0.0, 3.14], [0.5, 2.0]]
```

The "ruled" family selects its curve pair with the `pair` parameter
("helicoid", "spherical" or "loxodrome"), the remaining parameters go to the pair's constructor.
The "custom-grid" family takes a `grid` key with a path to a CSV file
(relative to the config file) with `u,v,x,y,z` columns.
"""

import json
from pathlib import Path
from typing import Any, Callable, Mapping, Optional

import numpy as np
import yaml

from ..errors import ConfigError, GeometryError
from ..model import Quadric1Params, Quadric2Params
from ..ruled import helicoid_pair, loxodrome_pair, ruled_surface, spherical_ruling_pair
from ..tools.types import StrPath
from .catalog import Catenoid, Cylinder, Helicoid, Plane, Sphere
from .numeric import TabulatedSurface
from .patch import Domain, SurfacePatch
from .quadric import Quadric1Surface, Quadric2Surface

ALLOWED_KEYS = {"name", "family", "params", "domain", "grid"}
TEXT_PARAMS = {"pair"}

SurfaceFactory = Callable[[dict[str, Any], Optional[Domain]], SurfacePatch]


def _numeric_params(family: str, params: Mapping[str, Any]) -> dict[str, Any]:
    """_numeric_params converts every parameter (apart from TEXT_PARAMS) to a float,
    or a nested list of floats for vectors and matrices.

    >>> _numeric_params("sphere", {"r": 2, "center": [0, 1, "2"]})
    {'r': 2.0, 'center': [0.0, 1.0, 2.0]}
    """
    converted: dict[str, Any] = {}
    for key, value in params.items():
        if key in TEXT_PARAMS:
            converted[key] = value
            continue
        try:
            if isinstance(value, (list, tuple)):
                converted[key] = np.asarray(value, dtype=np.float64).tolist()
            else:
                converted[key] = float(value)
        except (TypeError, ValueError):
            raise ConfigError(
                f"{family}: parameter {key} must be numeric, got {value!r}"
            ) from None
    return converted


def _ruled(params: dict[str, Any], domain: Optional[Domain]) -> SurfacePatch:
    pair = params.pop("pair", "helicoid")
    if pair == "helicoid":
        curves = helicoid_pair(**params)
    elif pair == "spherical":
        curves = spherical_ruling_pair(**params)
    elif pair == "loxodrome":
        curves = loxodrome_pair(**params)
    else:
        raise ConfigError(f"unknown ruled curve pair: {pair!r}")
    return ruled_surface(curves, domain)


FAMILIES: Mapping[str, SurfaceFactory] = {
    "sphere": lambda p, d: Sphere(domain=d, **p),
    "plane": lambda p, d: Plane(domain=d, **p),
    "cylinder": lambda p, d: Cylinder(domain=d, **p),
    "helicoid": lambda p, d: Helicoid(domain=d, **p),
    "catenoid": lambda p, d: Catenoid(domain=d, **p),
    "ruled": _ruled,
    "quadric1": lambda p, d: Quadric1Surface(Quadric1Params(**p), d),
    "quadric2": lambda p, d: Quadric2Surface(Quadric2Params(**p), d),
}


def build_surface(
    family: str,
    params: Optional[Mapping[str, Any]] = None,
    domain: Optional[Domain] = None,
) -> SurfacePatch:
    """build_surface creates a catalog surface from its family name and parameters.

    >>> build_surface("sphere", {"r": 2.0}).describe()
    'sphere(r=2)'
    >>> build_surface("torus")
    Traceback (most recent call last):
    ...
    thirdform.errors.ConfigError: unknown surface family: 'torus'

    Raises ConfigError on unknown families, unknown or invalid parameters.
    """
    factory = FAMILIES.get(family)
    if factory is None:
        raise ConfigError(f"unknown surface family: {family!r}")
    try:
        return factory(_numeric_params(family, params or {}), domain)
    except ConfigError:
        raise
    except GeometryError as e:
        raise ConfigError(f"{family}: {e}") from None
    except (TypeError, ValueError) as e:
        raise ConfigError(f"{family}: invalid parameters: {e}") from None


def parse_domain(raw: Any) -> Domain:
    """parse_domain converts `[[u0, u1], [v0, v1]]` into a Domain.

    >>> parse_domain([[0, 1], [-1, 1]])
    Domain(u0=0.0, u1=1.0, v0=-1.0, v1=1.0)
    """
    try:
        return Domain.from_pairs(raw)
    except (TypeError, ValueError) as e:
        raise ConfigError(f"invalid domain {raw!r}: {e}") from None


def surface_from_mapping(data: Any, base_dir: StrPath = ".") -> SurfacePatch:
    """surface_from_mapping creates a surface from an already-deserialized config."""
    if not isinstance(data, dict):
        raise ConfigError("surface config must be a mapping")

    unknown = set(data).difference(ALLOWED_KEYS)
    if unknown:
        raise ConfigError(f"unknown key(s) in surface config: {', '.join(sorted(unknown))}")
    if "family" not in data:
        raise ConfigError("surface config is missing the 'family' key")

    family = data["family"]
    params = data.get("params") or {}
    if not isinstance(params, dict):
        raise ConfigError("'params' must be a mapping")
    domain = parse_domain(data["domain"]) if data.get("domain") is not None else None

    if family == "custom-grid":
        if "grid" not in data:
            raise ConfigError("custom-grid surface config is missing the 'grid' key")
        surface: SurfacePatch = TabulatedSurface.from_csv(
            Path(base_dir) / data["grid"], data.get("name")
        )
        if domain is not None:
            surface.domain = domain
        return surface
    elif "grid" in data:
        raise ConfigError("'grid' is only allowed for the custom-grid family")

    surface = build_surface(family, params, domain)
    if data.get("name"):
        surface.name = str(data["name"])
    return surface


def load_surface(path: StrPath) -> SurfacePatch:
    """load_surface reads a surface config from a YAML or JSON file
    (JSON is picked by the .json extension)."""
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as f:
            data = json.load(f) if path.suffix.lower() == ".json" else yaml.safe_load(f)
    except OSError as e:
        raise ConfigError(f"{path}: {e.strerror}") from None
    except (yaml.YAMLError, json.JSONDecodeError) as e:
        raise ConfigError(f"{path}: malformed config: {e}") from None
    return surface_from_mapping(data, path.parent)
