"""Exact classification of almost stretched Gorenstein Artinian local algebras.

The package works in the finite-dimensional quotient Q[[x1..xh]]/n^(s+1):
truncated power series with exact rational coefficients, ideal spans by
reduced echelon forms, a constructive normal-form pipeline that emits
machine-checkable change-of-variables certificates, and computable
isomorphism invariants that separate the canonical classes at instances.
"""

from .classify import (
    Certificate,
    classify,
    classify_ideal,
    collapse_d_large,
    collapse_r_large,
    normalize_d,
    normalize_regular,
    recover_model_parameters,
    reduce_to_rw,
    reduce_zero_case,
    verify_certificate,
)
from .errors import (
    AlgebraError,
    AmbientError,
    BadSubstitutionError,
    GuardError,
    InternalCheckError,
    NotTypeError,
    NotUnitError,
    OutOfTheoremError,
    ParamError,
    ParseError,
    RootMismatchError,
)
from .expr import format_expr, parse_expr
from .invariants import (
    LocusReport,
    SigmaReport,
    sigma_invariant,
    square_in_cube,
    square_zero_locus,
)
from .models import (
    ModelLabel,
    couple_params,
    enumerate_models,
    ideal_from_a,
    label_ideal,
    model_ideal,
)
from .quotient import (
    CoupleParams,
    EchelonSubspace,
    IdealPres,
    dimension,
    equal_spans,
    hilbert,
    member,
    quadric_initial_part,
    socle_dimension,
    socle_filtration,
    span_ideal,
    type_check,
)
from .series import (
    Series,
    Substitution,
    compose,
    invert,
    invert_substitution,
    nth_root,
    rational_nth_root,
    restrict_axis,
    substitute,
)

__all__ = [
    "AlgebraError",
    "AmbientError",
    "BadSubstitutionError",
    "Certificate",
    "CoupleParams",
    "EchelonSubspace",
    "GuardError",
    "IdealPres",
    "InternalCheckError",
    "LocusReport",
    "ModelLabel",
    "NotTypeError",
    "NotUnitError",
    "OutOfTheoremError",
    "ParamError",
    "ParseError",
    "RootMismatchError",
    "Series",
    "SigmaReport",
    "Substitution",
    "classify",
    "classify_ideal",
    "collapse_d_large",
    "collapse_r_large",
    "compose",
    "couple_params",
    "dimension",
    "enumerate_models",
    "equal_spans",
    "format_expr",
    "hilbert",
    "ideal_from_a",
    "invert",
    "invert_substitution",
    "label_ideal",
    "member",
    "model_ideal",
    "normalize_d",
    "normalize_regular",
    "nth_root",
    "parse_expr",
    "quadric_initial_part",
    "rational_nth_root",
    "recover_model_parameters",
    "reduce_to_rw",
    "reduce_zero_case",
    "restrict_axis",
    "sigma_invariant",
    "socle_dimension",
    "socle_filtration",
    "span_ideal",
    "square_in_cube",
    "square_zero_locus",
    "substitute",
    "type_check",
    "verify_certificate",
]

__version__ = "0.1.0"
