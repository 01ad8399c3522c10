from dataclasses import dataclass
from typing import final

from ..tools.types import Vector
from .param_point import ParamPoint


@final
@dataclass(frozen=True, eq=False)
class OperatorSample:
    """OperatorSample is Δ^F x evaluated at a single guarded point of a surface,
    together with the data needed by identity checks and the Λ fit."""

    point: ParamPoint
    x: Vector
    value: Vector
    K: float
    H: float
    n: Vector
