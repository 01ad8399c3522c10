from itertools import product
from typing import Optional, final

import numpy as np
import numpy.typing as npt

from ..model import Jet2, ParamPoint
from ..options import Tolerances
from ..tools.types import Matrix, Vector
from .patch import Domain, SurfacePatch


@final
class RigidMotion(SurfacePatch):
    """RigidMotion moves a surface in space: x̃ = Rx + t for a rotation R."""

    def __init__(
        self,
        inner: SurfacePatch,
        rotation: npt.ArrayLike,
        translation: Optional[npt.ArrayLike] = None,
    ) -> None:
        super().__init__(f"moved {inner.name}", inner.params, inner.domain)
        self.inner = inner
        self.rotation: Matrix = np.asarray(rotation, dtype=np.float64)
        self.translation: Vector = (
            np.zeros(3) if translation is None else np.asarray(translation, dtype=np.float64)
        )

    def contains(self, p: ParamPoint) -> bool:
        return self.inner.contains(p)

    def guard(self, p: ParamPoint, tolerances: Tolerances) -> bool:
        return self.inner.guard(p, tolerances)

    def evaluate(self, p: ParamPoint) -> Jet2:
        return self.inner.evaluate(p).moved(self.rotation, self.translation)


@final
class LinearChart(SurfacePatch):
    """LinearChart reparametrizes a surface by a constant invertible 2×2 matrix:
    x̃(ũ) = x(M·ũ). Its domain is the bounding box of the pre-image of the inner domain;
    `contains` only accepts points mapped into the inner domain.

    >>> from thirdform.surfaces.catalog import Plane
    >>> chart = LinearChart(Plane(), [[0.0, 1.0], [1.0, 0.0]])
    >>> chart.to_inner(ParamPoint(0.25, 0.5))
    ParamPoint(u=0.5, v=0.25)
    """

    SHEAR = ((1.0, 0.3), (0.0, 1.0))
    """(u, v) ↦ (u + 0.3v, v)"""

    SWAP = ((0.0, 1.0), (1.0, 0.0))
    """(u, v) ↦ (v, u), flipping the orientation of the normal."""

    def __init__(self, inner: SurfacePatch, matrix: npt.ArrayLike) -> None:
        self.matrix: Matrix = np.asarray(matrix, dtype=np.float64)
        self.inverse: Matrix = np.linalg.inv(self.matrix)
        d = inner.domain
        corners = np.array(
            [self.inverse @ np.array(c) for c in product((d.u0, d.u1), (d.v0, d.v1))]
        )
        lo = corners.min(axis=0)
        hi = corners.max(axis=0)
        super().__init__(
            f"{inner.name} (linear chart)",
            inner.params,
            Domain(float(lo[0]), float(hi[0]), float(lo[1]), float(hi[1])),
        )
        self.inner = inner

    def to_inner(self, p: ParamPoint) -> ParamPoint:
        u, v = self.matrix @ p.as_array()
        return ParamPoint(float(u), float(v))

    def from_inner(self, p: ParamPoint) -> ParamPoint:
        u, v = self.inverse @ p.as_array()
        return ParamPoint(float(u), float(v))

    def contains(self, p: ParamPoint) -> bool:
        return p.is_finite() and self.inner.contains(self.to_inner(p))

    def guard(self, p: ParamPoint, tolerances: Tolerances) -> bool:
        return self.inner.guard(self.to_inner(p), tolerances)

    def evaluate(self, p: ParamPoint) -> Jet2:
        return self.inner.evaluate(self.to_inner(p)).reparametrized(self.matrix)
