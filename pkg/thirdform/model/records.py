from dataclasses import dataclass, field
from typing import Optional, final

from typing_extensions import LiteralString

from .lambda_fit import Verdict
from .meta.record import CSVValue, JSONValue, Record, json_float, json_floats
from .tpoly import MAX_DEGREE, TPoly


@final
@dataclass
class FitRecord(Record):
    """FitRecord reports a single Λ fit and its classification."""

    surface: str
    verdict: Verdict
    expected: Optional[str] = None
    passed: bool = False

    @staticmethod
    def record_kind() -> LiteralString:
        return "fit"

    def as_json(self) -> dict[str, JSONValue]:
        fit = self.verdict.lambda_fit
        return {
            "surface": self.surface,
            "mode": fit.mode,
            "lambda": json_floats(fit.flat()),
            "residual_max": json_float(fit.residual_max),
            "residual_rms": json_float(fit.residual_rms),
            "verdict": self.verdict.kind.value,
            "expected": self.expected,
            "n_samples": fit.n_samples,
            "tau": json_float(self.verdict.threshold),
            "condition_number": json_float(fit.condition_number),
            "solver": fit.solver,
            "passed": self.passed,
        }

    def csv_row(self) -> dict[str, CSVValue]:
        fit = self.verdict.lambda_fit
        row: dict[str, CSVValue] = {
            "surface": self.surface,
            "mode": fit.mode,
        }
        flat = fit.flat()
        for i in range(12):
            row[f"lambda_{i}"] = json_float(flat[i]) if i < len(flat) else None
        row["residual_max"] = json_float(fit.residual_max)
        row["residual_rms"] = json_float(fit.residual_rms)
        row["verdict"] = self.verdict.kind.value
        row["n_samples"] = fit.n_samples
        row["tau"] = json_float(self.verdict.threshold)
        row["passed"] = self.passed
        return row


@final
@dataclass
class CheckRecord(Record):
    """CheckRecord reports a residual-based check: the check passes iff value < threshold."""

    check: str
    surface: str
    value: float
    threshold: float
    n_points: int = 0
    details: dict[str, JSONValue] = field(default_factory=dict[str, JSONValue])

    @property
    def passed(self) -> bool:
        return self.value < self.threshold

    @staticmethod
    def record_kind() -> LiteralString:
        return "check"

    def as_json(self) -> dict[str, JSONValue]:
        return {
            "check": self.check,
            "surface": self.surface,
            "value": json_float(self.value),
            "threshold": json_float(self.threshold),
            "n_points": self.n_points,
            "details": self.details,
            "passed": self.passed,
        }

    def csv_row(self) -> dict[str, CSVValue]:
        return {
            "check": self.check,
            "surface": self.surface,
            "value": json_float(self.value),
            "threshold": json_float(self.threshold),
            "n_points": self.n_points,
            "passed": self.passed,
        }


@final
@dataclass
class QuadricRow(Record):
    """QuadricRow is a single row of the quadric table."""

    family: str
    a: float
    b: float
    c: Optional[float]
    verdict: str
    predicted: str
    residual_max: float
    identity_max: float
    closed_form_max: float
    third_coordinate: str
    closed_form_threshold: float
    tau: float

    @property
    def refuted(self) -> bool:
        """refuted is True if the strict fit residual reaches 10·tau,
        that is no constant Λ comes close to reproducing the samples."""
        return self.residual_max >= 10.0 * self.tau

    @property
    def passed(self) -> bool:
        if self.verdict != self.predicted or self.closed_form_max >= self.closed_form_threshold:
            return False
        return self.refuted or self.predicted != "NotCoordinateFiniteType"

    @staticmethod
    def record_kind() -> LiteralString:
        return "quadric"

    def as_json(self) -> dict[str, JSONValue]:
        return dict(self.csv_row())

    def csv_row(self) -> dict[str, CSVValue]:
        return {
            "family": self.family,
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "verdict": self.verdict,
            "predicted": self.predicted,
            "residual_max": json_float(self.residual_max),
            "identity_max": json_float(self.identity_max),
            "closed_form_max": json_float(self.closed_form_max),
            "third_coordinate": self.third_coordinate,
            "refuted": self.refuted,
            "passed": self.passed,
        }


@final
@dataclass
class CoefficientRecord(Record):
    """CoefficientRecord compares the closed-form and probed operator coefficients
    Q₁…Q₅ of a ruled surface at a fixed s."""

    surface: str
    s: float
    closed_form: tuple[TPoly, ...]
    probed: tuple[TPoly, ...]
    max_deviation: float
    threshold: float
    t1_beta_prime: float
    matching_variants: list[str]
    discriminating: bool = True
    """discriminating is False where both printed variants of the t¹ β′ coefficient coincide
    (like on helicoids), and any of them may match."""

    @property
    def passed(self) -> bool:
        if self.max_deviation >= self.threshold:
            return False
        elif self.discriminating:
            return len(self.matching_variants) == 1
        return len(self.matching_variants) > 0

    @staticmethod
    def record_kind() -> LiteralString:
        return "coefficients"

    def as_json(self) -> dict[str, JSONValue]:
        return {
            "surface": self.surface,
            "s": json_float(self.s),
            "closed_form": {
                f"Q{i + 1}": json_floats(q.padded()) for i, q in enumerate(self.closed_form)
            },
            "probed": {f"Q{i + 1}": json_floats(q.padded()) for i, q in enumerate(self.probed)},
            "max_deviation": json_float(self.max_deviation),
            "threshold": json_float(self.threshold),
            "t1_beta_prime": json_float(self.t1_beta_prime),
            "matching_variants": list(self.matching_variants),
            "discriminating": self.discriminating,
            "passed": self.passed,
        }

    def csv_row(self) -> dict[str, CSVValue]:
        row: dict[str, CSVValue] = {"surface": self.surface, "s": json_float(self.s)}
        for i, (closed, probed) in enumerate(zip(self.closed_form, self.probed)):
            for power in range(MAX_DEGREE + 1):
                row[f"Q{i + 1}_t{power}_closed"] = json_float(closed.coefficient(power))
                row[f"Q{i + 1}_t{power}_probed"] = json_float(probed.coefficient(power))
        row["max_deviation"] = json_float(self.max_deviation)
        row["t1_beta_prime"] = json_float(self.t1_beta_prime)
        row["matching_variants"] = "|".join(self.matching_variants)
        row["discriminating"] = self.discriminating
        row["passed"] = self.passed
        return row
