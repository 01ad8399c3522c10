from typing import Sequence, final

import numpy as np
import numpy.typing as npt

from ..analyzer import is_admissible, sample_domain
from ..beltrami import delta3_position
from ..model import CheckRecord
from ..surfaces import LinearChart, SurfacePatch
from ..task import Task, TaskRuntime


@final
class ChartInvariance(Task):
    """ChartInvariance checks that K, H and Δ^III x do not depend on the chart:
    every surface is compared with itself composed with a linear parameter change,
    at corresponding points."""

    def __init__(
        self,
        surfaces: Sequence[SurfacePatch],
        matrix: npt.ArrayLike = LinearChart.SHEAR,
        threshold: float = 1e-5,
    ) -> None:
        super().__init__()
        self.surfaces = surfaces
        self.matrix = np.asarray(matrix, dtype=np.float64)
        self.threshold = threshold

    def execute(self, r: TaskRuntime) -> None:
        tolerances = r.options.tolerances
        for surface in self.surfaces:
            chart = LinearChart(surface, self.matrix)
            points = [
                p
                for p in sample_domain(chart, r.options.grid, tolerances)
                if is_admissible(surface, chart.to_inner(p), tolerances)
            ]
            worst = 0.0
            for p in points:
                moved = delta3_position(chart, p, tolerances)
                original = delta3_position(surface, chart.to_inner(p), tolerances)
                worst = max(
                    worst,
                    abs(moved.K - original.K),
                    abs(moved.H - original.H),
                    float(np.max(np.abs(moved.value - original.value))),
                )
            if not points:
                worst = float("inf")
            self.report(
                r,
                CheckRecord(
                    "chart-invariance", surface.describe(), worst, self.threshold, len(points)
                ),
            )
