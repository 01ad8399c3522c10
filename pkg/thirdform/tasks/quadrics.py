from typing import Sequence, final

from ..analyzer import sample_domain
from ..beltrami import POSITION, laplace_beltrami_many
from ..model import CheckRecord, Quadric2Params
from ..quadrics import QuadricParams, quadric_table
from ..surfaces import Quadric2Surface
from ..task import Task, TaskRuntime


@final
class QuadricTable(Task):
    """QuadricTable classifies every given quadric and compares the closed-form
    Δ^III x with the generic one (see quadrics.quadric_row)."""

    def __init__(self, families: Sequence[QuadricParams], name: str = "QuadricTable") -> None:
        super().__init__(name)
        self.families = families

    def execute(self, r: TaskRuntime) -> None:
        self.logger.info("Classifying %d quadric(s)", len(self.families))
        for row in quadric_table(self.families, r.options.grid, r.options.tolerances):
            self.report(r, row)


@final
class KindIICoordinates(Task):
    """KindIICoordinates checks Δ^III u = −2ug and Δ^III v = −2vg on kind-II quadrics,
    g = 1 + (au)² + (bv)², with the generic operator."""

    def __init__(self, families: Sequence[Quadric2Params], threshold: float = 1e-5) -> None:
        super().__init__()
        self.families = families
        self.threshold = threshold

    def execute(self, r: TaskRuntime) -> None:
        tolerances = r.options.tolerances
        for params in self.families:
            surface = Quadric2Surface(params)
            points = sample_domain(surface, r.options.grid, tolerances)
            worst = 0.0
            for p in points:
                du, dv = laplace_beltrami_many(surface, "III", POSITION[:2], p, tolerances)
                g = params.g(p.u, p.v)
                worst = max(worst, abs(du + 2.0 * p.u * g), abs(dv + 2.0 * p.v * g))
            self.report(
                r,
                CheckRecord(
                    "kind-ii-coordinates", surface.describe(), worst, self.threshold, len(points)
                ),
            )
