import csv
from typing import Optional, final

import numpy as np
import numpy.typing as npt
from scipy.interpolate import RectBivariateSpline

from ..errors import ConfigError
from ..kernel import PositionFunction, finite_difference_jet
from ..model import Jet2, ParamPoint
from ..tools.types import StrPath, Vector
from .patch import Domain, SurfacePatch


@final
class FiniteDifferenceSurface(SurfacePatch):
    """FiniteDifferenceSurface wraps a user-supplied position function x(u, v);
    its jets are built with central differences.

    The function must be defined slightly outside of the domain,
    up to 20 finite-difference steps away from it.
    """

    def __init__(
        self,
        name: str,
        position: PositionFunction,
        domain: Domain,
        h: float = 1e-4,
    ) -> None:
        super().__init__(name, {}, domain)
        self.position = position
        self.h = h

    def evaluate(self, p: ParamPoint) -> Jet2:
        return finite_difference_jet(self.position, p, self.h)


SPLINE_DEGREE = 5


@final
class TabulatedSurface(SurfacePatch):
    """TabulatedSurface interpolates positions given on a regular (u, v) grid
    with quintic splines, one per coordinate; jets come from the splines' derivatives.
    """

    def __init__(
        self,
        name: str,
        us: npt.ArrayLike,
        vs: npt.ArrayLike,
        positions: npt.ArrayLike,
    ) -> None:
        u_nodes = np.asarray(us, dtype=np.float64)
        v_nodes = np.asarray(vs, dtype=np.float64)
        xyz = np.asarray(positions, dtype=np.float64)

        if u_nodes.size <= SPLINE_DEGREE or v_nodes.size <= SPLINE_DEGREE:
            raise ConfigError(
                f"{name}: a tabulated surface needs at least {SPLINE_DEGREE + 1} "
                f"nodes along each axis, got {u_nodes.size}x{v_nodes.size}"
            )
        if xyz.shape != (u_nodes.size, v_nodes.size, 3):
            raise ConfigError(
                f"{name}: positions must have shape ({u_nodes.size}, {v_nodes.size}, 3), "
                f"got {xyz.shape}"
            )

        super().__init__(
            name,
            {},
            Domain(float(u_nodes[0]), float(u_nodes[-1]), float(v_nodes[0]), float(v_nodes[-1])),
        )
        self.splines = [
            RectBivariateSpline(u_nodes, v_nodes, xyz[:, :, k], kx=SPLINE_DEGREE, ky=SPLINE_DEGREE)
            for k in range(3)
        ]

    def _ev(self, p: ParamPoint, du: int, dv: int) -> Vector:
        return np.array([float(s.ev(p.u, p.v, dx=du, dy=dv)) for s in self.splines])

    def evaluate(self, p: ParamPoint) -> Jet2:
        return Jet2(
            x=self._ev(p, 0, 0),
            x_u=self._ev(p, 1, 0),
            x_v=self._ev(p, 0, 1),
            x_uu=self._ev(p, 2, 0),
            x_uv=self._ev(p, 1, 1),
            x_vv=self._ev(p, 0, 2),
        )

    @classmethod
    def from_csv(cls, path: StrPath, name: Optional[str] = None) -> "TabulatedSurface":
        """from_csv loads a regular grid from a CSV file with `u,v,x,y,z` columns.
        Rows may come in any order, but every (u, v) pair of the grid must be present.
        """
        name = name or "custom-grid"
        with open(path, "r", encoding="utf-8", newline="") as f:
            reader = csv.DictReader(f)
            missing = {"u", "v", "x", "y", "z"}.difference(reader.fieldnames or [])
            if missing:
                raise ConfigError(f"{path}: missing column(s): {', '.join(sorted(missing))}")
            try:
                rows = [
                    (float(r["u"]), float(r["v"]), float(r["x"]), float(r["y"]), float(r["z"]))
                    for r in reader
                ]
            except ValueError as e:
                raise ConfigError(f"{path}: {e}") from None

        us = sorted({r[0] for r in rows})
        vs = sorted({r[1] for r in rows})
        if len(rows) != len(us) * len(vs):
            raise ConfigError(
                f"{path}: {len(rows)} rows do not form a regular {len(us)}x{len(vs)} grid"
            )

        u_index = {u: i for i, u in enumerate(us)}
        v_index = {v: i for i, v in enumerate(vs)}
        positions = np.full((len(us), len(vs), 3), np.nan)
        for u, v, x, y, z in rows:
            positions[u_index[u], v_index[v]] = (x, y, z)
        if np.isnan(positions).any():
            raise ConfigError(f"{path}: duplicated (u, v) pairs in the grid")

        return cls(name, us, vs, positions)
