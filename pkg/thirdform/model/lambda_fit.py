from dataclasses import dataclass, field
from enum import Enum
from typing import Literal, Optional, final

import numpy as np

from ..tools.types import Matrix, Vector

FitMode = Literal["strict", "affine"]
SolverPath = Literal["cholesky", "qr"]


@final
@dataclass(frozen=True, eq=False)
class LambdaFit:
    """LambdaFit is the least-squares solution of Δx = Λx (strict mode)
    or Δx = Λx + B (affine mode) over a set of samples."""

    lambda_matrix: Matrix
    translation: Optional[Vector]
    residual_max: float
    residual_rms: float
    n_samples: int
    mode: FitMode
    condition_number: float = field(default=float("nan"))
    solver: SolverPath = field(default="cholesky")

    def flat(self) -> list[float]:
        """flat returns Λ row-major, followed by B in affine mode (9 or 12 numbers)."""
        numbers = [float(i) for i in self.lambda_matrix.reshape(-1)]
        if self.translation is not None:
            numbers.extend(float(i) for i in self.translation)
        return numbers

    def distance_to(self, target: Matrix) -> float:
        """distance_to returns max |Λ_ij − target_ij|."""
        return float(np.max(np.abs(self.lambda_matrix - target)))


class VerdictKind(str, Enum):
    NULL_TYPE = "NullType"
    """Δx = 0: a minimal surface (for ruled surfaces, a helicoid)."""

    SPHERE_TYPE = "SphereType"
    """Δx = 2x: a part of a sphere centered at the origin."""

    GENERAL_LAMBDA = "GeneralLambda"
    """The fit is exact, but Λ is neither 0 nor 2I."""

    NOT_COORDINATE_FINITE_TYPE = "NotCoordinateFiniteType"
    """No constant Λ reproduces the samples."""

    @property
    def is_finite_type(self) -> bool:
        return self is not VerdictKind.NOT_COORDINATE_FINITE_TYPE


@final
@dataclass(frozen=True, eq=False)
class Verdict:
    kind: VerdictKind
    lambda_fit: LambdaFit
    threshold: float
