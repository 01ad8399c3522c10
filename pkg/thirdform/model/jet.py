from dataclasses import dataclass
from typing import final

import numpy as np

from ..tools.types import Matrix, Vector, all_finite


@final
@dataclass(frozen=True, eq=False)
class Jet2:
    """Jet2 holds the position and partial derivatives, up to the second order,
    of a parametrization at a single point.
    """

    x: Vector
    x_u: Vector
    x_v: Vector
    x_uu: Vector
    x_uv: Vector
    x_vv: Vector

    def immersion_norm(self) -> float:
        """immersion_norm returns |x_u × x_v|, which is zero iff the jet is not immersive."""
        return float(np.linalg.norm(np.cross(self.x_u, self.x_v)))

    def is_finite(self) -> bool:
        return all_finite(self.x, self.x_u, self.x_v, self.x_uu, self.x_uv, self.x_vv)

    def moved(self, rotation: Matrix, translation: Vector) -> "Jet2":
        """moved applies the rigid motion x ↦ Rx + t. Derivatives only get rotated."""
        return Jet2(
            x=rotation @ self.x + translation,
            x_u=rotation @ self.x_u,
            x_v=rotation @ self.x_v,
            x_uu=rotation @ self.x_uu,
            x_uv=rotation @ self.x_uv,
            x_vv=rotation @ self.x_vv,
        )

    def reparametrized(self, m: Matrix) -> "Jet2":
        """reparametrized returns the jet of x̃(ũ) = x(M·ũ) for a constant 2×2 matrix M,
        i.e. x̃_a = Σ M_ia x_i and x̃_ab = Σ M_ia M_jb x_ij.
        """
        second = np.array(
            [[self.x_uu, self.x_uv], [self.x_uv, self.x_vv]], dtype=np.float64
        )  # shape (2, 2, 3)
        first = np.array([self.x_u, self.x_v], dtype=np.float64)  # shape (2, 3)
        new_first = np.einsum("ia,ik->ak", m, first)
        new_second = np.einsum("ia,jb,ijk->abk", m, m, second)
        return Jet2(
            x=self.x,
            x_u=new_first[0],
            x_v=new_first[1],
            x_uu=new_second[0, 0],
            x_uv=new_second[0, 1],
            x_vv=new_second[1, 1],
        )
