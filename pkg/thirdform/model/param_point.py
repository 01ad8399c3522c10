from dataclasses import dataclass
from typing import final

import numpy as np

from ..tools.types import Vector


@final
@dataclass(frozen=True)
class ParamPoint:
    """ParamPoint is a point (u, v) of the parameter domain of a surface.

    >>> ParamPoint(0.5, -1.0).shifted(0.25, 0.0)
    ParamPoint(u=0.75, v=-1.0)
    """

    u: float
    v: float

    def shifted(self, du: float, dv: float) -> "ParamPoint":
        return ParamPoint(self.u + du, self.v + dv)

    def as_array(self) -> Vector:
        return np.array([self.u, self.v], dtype=np.float64)

    def is_finite(self) -> bool:
        return bool(np.isfinite(self.u) and np.isfinite(self.v))
