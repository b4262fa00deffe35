"""A workbench for restriction categories over finite partial maps."""

from .calg import BoolRing, CalgModel, NonUnitalHom, bring, dual_map, dual_object
from .core import RestrictionModel, compatible, disjoint, is_total, leq
from .dsl import Document, evaluate, format_model, parse_document, parse_model
from .errors import (
    BudgetExceeded,
    EvalError,
    Incompatible,
    InvalidMap,
    NotBelow,
    ParseError,
    RCWBError,
    TypeMismatch,
    ValidationError,
)
from .finpar import FinParModel, FinSet, PartialMap, atom
from .kleisli import KleisliMap, KleisliModel
from .laws import Budget, LawReport, check_axioms
from .oracle import verify_universal
from .suites import run_suites

__all__ = [
    "BoolRing",
    "Budget",
    "BudgetExceeded",
    "CalgModel",
    "Document",
    "EvalError",
    "FinParModel",
    "FinSet",
    "Incompatible",
    "InvalidMap",
    "KleisliMap",
    "KleisliModel",
    "LawReport",
    "NonUnitalHom",
    "NotBelow",
    "ParseError",
    "PartialMap",
    "RCWBError",
    "RestrictionModel",
    "TypeMismatch",
    "ValidationError",
    "atom",
    "bring",
    "check_axioms",
    "compatible",
    "disjoint",
    "dual_map",
    "dual_object",
    "evaluate",
    "format_model",
    "is_total",
    "leq",
    "parse_document",
    "parse_model",
    "run_suites",
    "verify_universal",
]
