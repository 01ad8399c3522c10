from typing import Optional, Sequence, final

import numpy as np
import numpy.typing as npt

from ..analyzer import analyze
from ..errors import GeometryError
from ..model import CheckRecord, FitMode, FitRecord, FormSelector, VerdictKind
from ..model.meta.record import json_float, json_floats
from ..surfaces import SurfacePatch
from ..task import Task, TaskRuntime


@final
class FitLambda(Task):
    """FitLambda samples a surface, fits Δ^F x = Λx (or Λx + B in affine mode)
    and classifies the fit.

    The check passes if the verdict equals the expected one (from the constructor,
    or else from RunOptions.expect). Without any expectation, it passes iff
    the surface turned out to be of coordinate finite type.
    """

    def __init__(
        self,
        surface: SurfacePatch,
        expected: Optional[VerdictKind] = None,
        mode: FitMode = "strict",
        form: FormSelector = "III",
        name: Optional[str] = None,
    ) -> None:
        super().__init__(name)
        self.surface = surface
        self.expected = expected
        self.mode: FitMode = mode
        self.form: FormSelector = form

    def execute(self, r: TaskRuntime) -> None:
        label = self.surface.describe()
        expected = self.expected or (VerdictKind(r.options.expect) if r.options.expect else None)
        self.logger.info("Fitting Δ^%s x = Λx (%s) on %s", self.form, self.mode, label)

        try:
            _, verdict = analyze(
                self.surface,
                r.options.grid,
                r.options.tolerances,
                self.mode,
                self.form,
                r.options.workers,
            )
        except GeometryError as e:
            self.logger.error("%s: %s", label, e)
            failure = CheckRecord("fit-lambda", label, float("inf"), 0.0, 0, {"error": str(e)})
            self.report(r, failure)
            return

        if expected is not None:
            passed = verdict.kind is expected
        else:
            passed = verdict.kind.is_finite_type

        self.logger.info("%s: %s", label, verdict.kind.value)
        self.report(
            r,
            FitRecord(
                label,
                verdict,
                expected.value if expected is not None else None,
                passed,
            ),
        )


@final
class LambdaTarget(Task):
    """LambdaTarget checks that the strict fit of Δ^III x = Λx on every surface
    reproduces a known Λ: max(|Λ − target|_max, residual_max) must stay below threshold.
    """

    def __init__(
        self,
        check: str,
        surfaces: Sequence[SurfacePatch],
        target: npt.ArrayLike,
        threshold: float = 1e-5,
    ) -> None:
        super().__init__(f"LambdaTarget.{check}")
        self.check = check
        self.surfaces = surfaces
        self.target = np.asarray(target, dtype=np.float64)
        self.threshold = threshold

    def execute(self, r: TaskRuntime) -> None:
        for surface in self.surfaces:
            fit, verdict = analyze(
                surface,
                r.options.grid,
                r.options.tolerances,
                "strict",
                "III",
                r.options.workers,
            )
            distance = fit.distance_to(self.target)
            self.report(
                r,
                CheckRecord(
                    self.check,
                    surface.describe(),
                    max(distance, fit.residual_max),
                    self.threshold,
                    fit.n_samples,
                    {
                        "lambda": json_floats(fit.flat()),
                        "distance_to_target": json_float(distance),
                        "residual_max": json_float(fit.residual_max),
                        "verdict": verdict.kind.value,
                    },
                ),
            )
