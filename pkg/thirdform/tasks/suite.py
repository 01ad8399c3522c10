"""Ready-made task lists: the full verification suite and the per-surface checks."""

from typing import Optional

import numpy as np

from ..model import FitMode, FormSelector, Quadric1Params, Quadric2Params, VerdictKind
from ..quadrics import default_quadric_families
from ..ruled import helicoid_pair, ruled_surface, spherical_ruling_pair
from ..surfaces import (
    Catenoid,
    Domain,
    Helicoid,
    Quadric1Surface,
    Quadric2Surface,
    Sphere,
    SurfacePatch,
)
from ..task import Task
from .chart import ChartInvariance
from .fit_lambda import FitLambda, LambdaTarget
from .identities import AbcIdentities, FormIdentities, GaussMapEigen, IdentityEq2
from .quadrics import KindIICoordinates, QuadricTable
from .ruled import CoefficientEquations, RuledConsistency, RuledReconstruction

SPHERE_RADII = (0.5, 1.0, 2.0, 5.0)
HELICOID_PITCHES = (0.5, 1.0, 2.0)
HELICOID_OFFSETS = (0.0, 1.0)
KIND_II_COEFFICIENTS = (0.5, 1.0, 2.0)


def catalog_surfaces() -> list[SurfacePatch]:
    """catalog_surfaces returns one representative of every non-parabolic catalog family."""
    return [
        Sphere(2.0),
        Helicoid(1.0, 0.5),
        Catenoid(1.0),
        Quadric1Surface(Quadric1Params(-1.0, -2.0, 1.0)),
        Quadric2Surface(Quadric2Params(1.0, 2.0)),
        ruled_surface(
            spherical_ruling_pair(theta=1.0, lam0=0.3, lam1=0.2, A0=1.0, A1=0.25),
            Domain(-1.0, 1.0, -1.5, 1.5),
        ),
    ]


def verification_suite(include: Optional[set[int]] = None) -> list[Task]:
    """verification_suite returns the tasks verifying the classification results,
    one group per numbered acceptance criterion (1–10). `include` selects a subset."""
    groups: dict[int, list[Task]] = {
        1: [
            LambdaTarget(
                "sphere-eigenrelation", [Sphere(r) for r in SPHERE_RADII], 2.0 * np.eye(3)
            )
        ],
        2: [
            LambdaTarget(
                "helicoid-null",
                [Helicoid(c5, lam) for c5 in HELICOID_PITCHES for lam in HELICOID_OFFSETS],
                np.zeros((3, 3)),
            )
        ],
        3: [LambdaTarget("catenoid-null", [Catenoid(1.0), Catenoid(2.0)], np.zeros((3, 3)))],
        4: [
            IdentityEq2(
                [
                    Sphere(2.0),
                    Helicoid(1.0),
                    Catenoid(1.0),
                    Quadric1Surface(Quadric1Params(-1.0, -2.0, 1.0)),
                    Quadric2Surface(Quadric2Params(1.0, 2.0)),
                ]
            ),
            GaussMapEigen(catalog_surfaces()),
        ],
        5: [RuledReconstruction(), RuledConsistency()],
        6: [
            CoefficientEquations(
                [
                    helicoid_pair(c5, lam)
                    for c5 in HELICOID_PITCHES
                    for lam in HELICOID_OFFSETS
                ]
            )
        ],
        7: [
            QuadricTable(
                [p for p in default_quadric_families() if isinstance(p, Quadric1Params)],
                "QuadricTable.KindI",
            )
        ],
        8: [
            QuadricTable(
                [p for p in default_quadric_families() if isinstance(p, Quadric2Params)],
                "QuadricTable.KindII",
            ),
            KindIICoordinates(
                [Quadric2Params(a, b) for a in KIND_II_COEFFICIENTS for b in KIND_II_COEFFICIENTS]
            ),
        ],
        9: [FormIdentities(catalog_surfaces()), AbcIdentities()],
        10: [ChartInvariance(catalog_surfaces())],
    }
    return [
        task
        for criterion, tasks in sorted(groups.items())
        if include is None or criterion in include
        for task in tasks
    ]


def surface_checks(
    surface: SurfacePatch,
    expected: Optional[VerdictKind] = None,
    mode: FitMode = "strict",
    form: FormSelector = "III",
) -> list[Task]:
    """surface_checks returns the tasks run by the `check` command on a single surface:
    the Λ fit, the Δ^III x identity and the Gauss map eigenrelation."""
    return [
        FitLambda(surface, expected, mode, form),
        IdentityEq2([surface]),
        GaussMapEigen([surface]),
    ]


__all__ = [
    "catalog_surfaces",
    "surface_checks",
    "verification_suite",
]
