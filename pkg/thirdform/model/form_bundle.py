from dataclasses import dataclass
from typing import Literal, final

from ..tools.types import Vector
from .sym_tensor import SymTensor2

FormSelector = Literal["I", "II", "III"]


@final
@dataclass(frozen=True, eq=False)
class FormBundle:
    """FormBundle holds the three fundamental forms, the unit normal
    and the curvatures of a surface at a single point.
    """

    g: SymTensor2
    """First fundamental form (metric), g_ij = ⟨x_i, x_j⟩."""

    b: SymTensor2
    """Second fundamental form, b_ij = ⟨x_ij, n⟩."""

    e: SymTensor2
    """Third fundamental form, e = b·g⁻¹·b."""

    n: Vector
    """Unit normal, (x_u × x_v) / |x_u × x_v|."""

    K: float
    H: float

    def form(self, selector: FormSelector) -> SymTensor2:
        if selector == "I":
            return self.g
        elif selector == "II":
            return self.b
        else:
            return self.e
