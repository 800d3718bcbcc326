"""Exact linear algebra over GF(p) and the rationals: spans, frames,
bases, change-of-basis certificates and brute-force oracles."""

__version__ = "0.1.0"

from .field import GF, QQ, Field, FieldMismatchError, Scalar, ScalarParseError
from .core import (
    Matrix,
    VecSequence,
    Vector,
    identity,
    kernel_basis,
    lin_comb,
    mat_product,
    matrix,
    reduced_form,
    sequence,
    solve_in_span,
    vector,
    zero_vector,
)
from .spans import (
    Coordinates,
    Frame,
    MaximalFrameError,
    NotAFrameError,
    Subspace,
    basis_from_generators,
    change_of_basis,
    coordinates,
    dimension,
    extend_frame,
    is_frame,
    is_maximal_in,
    member,
    rank_seq,
    span_of,
)
from .lemma import (
    InclusionCertificate,
    LinearMap,
    ProofTrace,
    apply_map,
    build_annihilating_map,
    check_certificate,
    rank_bound_check,
    restricted_kernel_witness,
    steinitz_extend,
    trace_induction,
    verify_basic_lemma,
)
from .oracle import (
    BudgetExceededError,
    EnumerationBudget,
    enum_span,
    maximality_bruteforce,
    member_bruteforce,
    rank_bruteforce,
)

__all__ = [
    "GF",
    "QQ",
    "Field",
    "Scalar",
    "FieldMismatchError",
    "ScalarParseError",
    "Vector",
    "VecSequence",
    "Matrix",
    "vector",
    "zero_vector",
    "sequence",
    "matrix",
    "identity",
    "lin_comb",
    "solve_in_span",
    "kernel_basis",
    "mat_product",
    "reduced_form",
    "Subspace",
    "Frame",
    "Coordinates",
    "NotAFrameError",
    "MaximalFrameError",
    "span_of",
    "member",
    "rank_seq",
    "is_frame",
    "is_maximal_in",
    "extend_frame",
    "basis_from_generators",
    "dimension",
    "coordinates",
    "change_of_basis",
    "LinearMap",
    "InclusionCertificate",
    "ProofTrace",
    "build_annihilating_map",
    "apply_map",
    "restricted_kernel_witness",
    "verify_basic_lemma",
    "trace_induction",
    "check_certificate",
    "steinitz_extend",
    "rank_bound_check",
    "EnumerationBudget",
    "BudgetExceededError",
    "enum_span",
    "member_bruteforce",
    "rank_bruteforce",
    "maximality_bruteforce",
]
