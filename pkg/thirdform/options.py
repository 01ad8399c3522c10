import os
from dataclasses import dataclass, field, fields, replace
from typing import Literal, Mapping, Optional

from .errors import ConfigError
from .tools.types import Self

OutputFormat = Literal["json", "csv", "text"]


@dataclass(frozen=True)
class Tolerances:
    eps_K: float = 1e-6
    """Points with |K| ≤ eps_K are considered parabolic and rejected by the sampler."""

    eps_q: float = 1e-6
    """Ruled-surface points with q(t) = t² + 2λt + κ ≤ eps_q are rejected by the sampler."""

    tau: float = 1e-4
    """Classification threshold for the fitted Λ matrix and its normalized residual."""

    fd_step: float = 1e-4
    """Step of the outer central-difference layer of the Laplace–Beltrami operator."""

    eps_domain: float = 1e-3
    """Minimum value of ω and T on charts of quadrics of the first kind."""

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if not value > 0.0:
                raise ConfigError(f"Tolerance {f.name} must be positive, got {value!r}")

    ENV_PREFIX = "THIRDFORM_"

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Tolerances":
        """from_env creates Tolerances with defaults overridden by
        THIRDFORM_EPS_K, THIRDFORM_EPS_Q, THIRDFORM_TAU, THIRDFORM_FD_STEP
        and THIRDFORM_EPS_DOMAIN environment variables.

        >>> Tolerances.from_env({"THIRDFORM_TAU": "1e-3"}).tau
        0.001
        >>> Tolerances.from_env({"THIRDFORM_EPS_K": "nope"})
        Traceback (most recent call last):
        ...
        thirdform.errors.ConfigError: THIRDFORM_EPS_K: not a number: 'nope'
        """
        if environ is None:
            environ = os.environ

        overrides: dict[str, float] = {}
        for f in fields(cls):
            key = cls.ENV_PREFIX + f.name.upper()
            if key in environ:
                try:
                    overrides[f.name] = float(environ[key])
                except ValueError:
                    raise ConfigError(f"{key}: not a number: {environ[key]!r}") from None
        return cls(**overrides)

    def with_overrides(self: Self, **overrides: Optional[float]) -> Self:
        """with_overrides returns a copy with every non-None keyword argument replaced.

        >>> Tolerances().with_overrides(tau=None, eps_K=1e-8).eps_K
        1e-08
        """
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


@dataclass(frozen=True)
class RunOptions:
    tolerances: Tolerances = field(default_factory=Tolerances)
    """Numerical thresholds shared by every check."""

    grid: tuple[int, int] = (6, 6)
    """Number of sample points along u and v."""

    output: OutputFormat = "json"
    """Format of the report written to the output stream."""

    seed: int = 0
    """Seed for every randomized check; identical seeds produce identical reports."""

    expect: Optional[str] = None
    """Expected verdict kind. If set, fit-like checks pass iff the verdict equals it."""

    timestamp: bool = True
    """Include the generated_at field in JSON reports."""

    workers: int = 1
    """Number of threads used to evaluate sample points."""

    fail_fast: bool = False
    """Stop the pipeline at the first failed check, instead of running all of them."""

    def __post_init__(self) -> None:
        n_u, n_v = self.grid
        if n_u < 3 or n_v < 3:
            raise ConfigError(f"Grid must be at least 3x3, got {n_u}x{n_v}")
        if self.workers < 1:
            raise ConfigError(f"workers must be positive, got {self.workers}")
