"""Fitting of the constant matrix Λ in Δ^III x = Λx over sampled points,
and the classification of surfaces based on the fit."""

import logging
from typing import TYPE_CHECKING, Sequence

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve, qr, solve_triangular

from .beltrami import evaluate_samples
from .errors import InsufficientSamples, RankDeficient
from .kernel import form_bundle, parabolic_guard
from .model import (
    FitMode,
    FormSelector,
    LambdaFit,
    OperatorSample,
    ParamPoint,
    SolverPath,
    Verdict,
    VerdictKind,
)
from .options import Tolerances

if TYPE_CHECKING:
    from .surfaces import SurfacePatch

logger = logging.getLogger(__name__)

MIN_SAMPLES = 6
MIN_GRID_POINTS = 9
MIN_FIT_SAMPLES: dict[FitMode, int] = {"strict": 6, "affine": 8}
CHOLESKY_MAX_CONDITION = 1e8


def is_admissible(surface: "SurfacePatch", p: ParamPoint, tolerances: Tolerances) -> bool:
    """is_admissible returns True if p passes all sampling guards: the finite-difference
    stencil around p stays in the domain, the surface's own guard accepts p,
    and p is not (nearly) parabolic."""
    h = tolerances.fd_step
    stencil = (p, p.shifted(h, h), p.shifted(-h, -h), p.shifted(h, -h), p.shifted(-h, h))
    return (
        all(surface.contains(q) for q in stencil)
        and surface.guard(p, tolerances)
        and parabolic_guard(form_bundle(surface.jet(p)), tolerances.eps_K)
    )


def sample_domain(
    surface: "SurfacePatch",
    grid: tuple[int, int],
    tolerances: Tolerances = Tolerances(),
) -> list[ParamPoint]:
    """sample_domain returns the cell-centered n_u × n_v grid over the surface's domain,
    without points rejected by the parabolic guard (|K| ≤ eps_K), by the surface's own guard
    (q ≤ eps_q on ruled surfaces, ω or T ≤ eps_domain on quadrics) or whose
    finite-difference stencil would leave the domain.

    Raises InsufficientSamples if fewer than 6 points survive.
    """
    n_u, n_v = grid
    if n_u * n_v < MIN_GRID_POINTS:
        raise ValueError(f"sampling grid must have at least {MIN_GRID_POINTS} points")

    points: list[ParamPoint] = []
    rejected = 0
    for p in surface.domain.grid(n_u, n_v):
        if is_admissible(surface, p, tolerances):
            points.append(p)
        else:
            rejected += 1

    logger.debug(
        "Sampled %d point(s) of %s, %d rejected by guards", len(points), surface.name, rejected
    )
    if len(points) < MIN_SAMPLES:
        raise InsufficientSamples(surface.describe(), len(points), MIN_SAMPLES)
    return points


def sample_random(
    surface: "SurfacePatch",
    rng: np.random.Generator,
    count: int,
    tolerances: Tolerances = Tolerances(),
    max_attempts_per_point: int = 20,
) -> list[ParamPoint]:
    """sample_random draws `count` admissible points uniformly from the surface's domain,
    by rejection.

    Raises InsufficientSamples if the attempts run out first.
    """
    d = surface.domain
    points: list[ParamPoint] = []
    for _ in range(count * max_attempts_per_point):
        p = ParamPoint(float(rng.uniform(d.u0, d.u1)), float(rng.uniform(d.v0, d.v1)))
        if is_admissible(surface, p, tolerances):
            points.append(p)
            if len(points) == count:
                return points
    raise InsufficientSamples(surface.describe(), len(points), count)


def fit_lambda(samples: Sequence[OperatorSample], mode: FitMode = "strict") -> LambdaFit:
    """fit_lambda solves Δx ≈ Λx (strict) or Δx ≈ Λx + B (affine) in the least-squares sense.

    The three rows of Λ share one design matrix; they are solved together
    through the normal equations with a Cholesky factorization, or with a QR factorization
    of the design matrix if the normal equations' condition number exceeds 1e8.

    The residual of a sample is |Δx − Λx − B| / (1 + |Δx|).
    """
    needed = MIN_FIT_SAMPLES[mode]
    if len(samples) < needed:
        raise InsufficientSamples("Λ fit", len(samples), needed)

    x = np.array([s.x for s in samples], dtype=np.float64)
    y = np.array([s.value for s in samples], dtype=np.float64)
    design = np.column_stack([x, np.ones(len(samples))]) if mode == "affine" else x
    columns = design.shape[1]

    rank = int(np.linalg.matrix_rank(design))
    if rank < columns:
        raise RankDeficient(rank, columns)

    normal = design.T @ design
    condition = float(np.linalg.cond(normal))
    solver: SolverPath = "cholesky"
    coefficients: np.ndarray | None = None

    if condition <= CHOLESKY_MAX_CONDITION:
        try:
            coefficients = cho_solve(cho_factor(normal), design.T @ y)
        except LinAlgError:
            coefficients = None

    if coefficients is None:
        solver = "qr"
        q, r = qr(design, mode="economic")
        coefficients = solve_triangular(r, q.T @ y)

    assert coefficients is not None
    lambda_matrix = coefficients[:3].T.copy()
    translation = coefficients[3].copy() if mode == "affine" else None

    predicted = design @ coefficients
    residuals = np.linalg.norm(y - predicted, axis=1) / (1.0 + np.linalg.norm(y, axis=1))
    logger.debug(
        "Λ fit over %d sample(s): cond = %.3g (%s), max residual %.3g",
        len(samples),
        condition,
        solver,
        float(residuals.max()),
    )

    return LambdaFit(
        lambda_matrix=lambda_matrix,
        translation=translation,
        residual_max=float(residuals.max()),
        residual_rms=float(np.sqrt(np.mean(residuals**2))),
        n_samples=len(samples),
        mode=mode,
        condition_number=condition,
        solver=solver,
    )


TWO_IDENTITY = 2.0 * np.eye(3)


def classify(fit: LambdaFit, tau: float = 1e-4) -> Verdict:
    """classify turns a fit into one of the verdicts:

    - NotCoordinateFiniteType if the residual reaches tau,
    - NullType if all entries of Λ are below tau,
    - SphereType if Λ is within tau from 2I,
    - GeneralLambda otherwise.
    """
    if fit.residual_max >= tau:
        kind = VerdictKind.NOT_COORDINATE_FINITE_TYPE
    elif fit.distance_to(np.zeros((3, 3))) < tau:
        kind = VerdictKind.NULL_TYPE
    elif fit.distance_to(TWO_IDENTITY) < tau:
        kind = VerdictKind.SPHERE_TYPE
    else:
        kind = VerdictKind.GENERAL_LAMBDA
    return Verdict(kind=kind, lambda_fit=fit, threshold=tau)


def analyze(
    surface: "SurfacePatch",
    grid: tuple[int, int] = (6, 6),
    tolerances: Tolerances = Tolerances(),
    mode: FitMode = "strict",
    form: FormSelector = "III",
    workers: int = 1,
) -> tuple[LambdaFit, Verdict]:
    """analyze samples the surface, evaluates Δ^F x, fits Λ and classifies the fit."""
    points = sample_domain(surface, grid, tolerances)
    samples = evaluate_samples(surface, points, form, tolerances, workers)
    fit = fit_lambda(samples, mode)
    verdict = classify(fit, tolerances.tau)
    logger.debug(
        "%s: %s (residual %.3g)", surface.describe(), verdict.kind.value, fit.residual_max
    )
    return fit, verdict
