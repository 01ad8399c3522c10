from .chart import ChartInvariance
from .fit_lambda import FitLambda, LambdaTarget
from .identities import AbcIdentities, FormIdentities, GaussMapEigen, IdentityEq2
from .quadrics import KindIICoordinates, QuadricTable
from .ruled import CoefficientEquations, RuledCoefficients, RuledConsistency, RuledReconstruction
from .suite import catalog_surfaces, surface_checks, verification_suite

__all__ = [
    "AbcIdentities",
    "catalog_surfaces",
    "ChartInvariance",
    "CoefficientEquations",
    "FitLambda",
    "FormIdentities",
    "GaussMapEigen",
    "IdentityEq2",
    "KindIICoordinates",
    "LambdaTarget",
    "QuadricTable",
    "RuledCoefficients",
    "RuledConsistency",
    "RuledReconstruction",
    "surface_checks",
    "verification_suite",
]
