from .form_bundle import FormBundle, FormSelector
from .jet import Jet2
from .lambda_fit import FitMode, LambdaFit, SolverPath, Verdict, VerdictKind
from .meta.record import CSVValue, JSONValue, Record
from .operator_sample import OperatorSample
from .param_point import ParamPoint
from .quadric_params import Quadric1Params, Quadric2Params
from .records import CheckRecord, CoefficientRecord, FitRecord, QuadricRow
from .ruled_invariants import RuledInvariants
from .sym_tensor import SymTensor2
from .tpoly import TPoly

__all__ = [
    "CheckRecord",
    "CoefficientRecord",
    "CSVValue",
    "FitMode",
    "FitRecord",
    "FormBundle",
    "FormSelector",
    "Jet2",
    "JSONValue",
    "LambdaFit",
    "OperatorSample",
    "ParamPoint",
    "Quadric1Params",
    "Quadric2Params",
    "QuadricRow",
    "Record",
    "RuledInvariants",
    "SolverPath",
    "SymTensor2",
    "TPoly",
    "Verdict",
    "VerdictKind",
]
