"""Spans, frames, maximality, bases, dimension, coordinates and the
change-of-basis matrix pair.

A subspace is represented by the unique reduced-echelon basis of the row
space of its generating sequence, so subspace equality is positional
comparison of canonical bases and extension choices are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .core import (
    Matrix,
    VecSequence,
    Vector,
    mat_product,
    matrix,
    matrix_from_rows,
    rank_matrix,
    reduced_form,
    solve_in_span,
    solve_many,
)
from .field import Field, Scalar


class NotAFrameError(ValueError):
    """A sequence required to be linearly independent is dependent."""


class MaximalFrameError(ValueError):
    """No extension vector exists: the frame already spans the subspace."""


def rank_seq(seq: VecSequence) -> int:
    """Rank of a sequence: the maximal length of an independent subsequence,
    computed as matrix rank."""
    return rank_matrix(matrix_from_rows(seq))


def is_frame(seq: VecSequence) -> bool:
    return rank_seq(seq) == len(seq)


@dataclass(frozen=True)
class Frame:
    """A linearly independent sequence; independence is validated once here."""

    seq: VecSequence

    def __post_init__(self) -> None:
        if not is_frame(self.seq):
            raise NotAFrameError("sequence is linearly dependent")

    @property
    def field(self) -> Field:
        return self.seq.field

    @property
    def ambient_dim(self) -> int:
        return self.seq.ambient_dim

    def __len__(self) -> int:
        return len(self.seq)

    def __getitem__(self, j: int) -> Vector:
        return self.seq[j]

    def __iter__(self):
        return iter(self.seq)


@dataclass(frozen=True)
class Coordinates:
    coeffs: Tuple[Scalar, ...]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)


@dataclass(frozen=True)
class Subspace:
    field: Field
    ambient_dim: int
    canonical_basis: VecSequence

    @property
    def dim(self) -> int:
        return len(self.canonical_basis)

    def contains(self, x: Vector) -> bool:
        return member(self, x) is not None

    def contains_seq(self, seq: VecSequence) -> bool:
        return all(self.contains(v) for v in seq)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_seq(self.canonical_basis)


def span_of(seq: VecSequence) -> Subspace:
    """The minimal subspace containing every item of ``seq``."""
    red = reduced_form(matrix_from_rows(seq))
    rows = red.matrix.entries[: red.rank]
    basis = VecSequence(seq.field, seq.ambient_dim, tuple(Vector(seq.field, r) for r in rows))
    return Subspace(seq.field, seq.ambient_dim, basis)


def member(sub: Subspace, x: Vector) -> Optional[Coordinates]:
    """Coordinates of ``x`` relative to the canonical basis, if x lies in sub."""
    coeffs = solve_in_span(sub.canonical_basis, x)
    return None if coeffs is None else Coordinates(coeffs)


def is_maximal_in(fr: Frame, sub: Subspace) -> bool:
    """True iff the frame spans ``sub``.  The span test is equivalent to the
    rank-bound definition of maximality; the oracle module checks the
    definitional form on small instances."""
    if not sub.contains_seq(fr.seq):
        raise ValueError("frame is not contained in the subspace")
    return span_of(fr.seq) == sub


def extend_frame(fr: Frame, sub: Subspace) -> Vector:
    """The first canonical-basis vector of ``sub`` outside the frame's span;
    appending it keeps the sequence a frame."""
    if not sub.contains_seq(fr.seq):
        raise ValueError("frame is not contained in the subspace")
    fr_span = span_of(fr.seq)
    for v in sub.canonical_basis:
        if not fr_span.contains(v):
            return v
    raise MaximalFrameError("frame already spans the subspace")


def basis_from_generators(gens: VecSequence) -> Frame:
    """Greedy left-to-right independent subsequence spanning span(gens)."""
    kept = VecSequence(gens.field, gens.ambient_dim, ())
    r = 0
    for v in gens:
        candidate = kept.append(v)
        if rank_seq(candidate) > r:
            kept = candidate
            r += 1
    return Frame(kept)


def dimension(sub: Subspace) -> int:
    return sub.dim


def coordinates(basis: Frame, x: Vector) -> Coordinates:
    """The unique coefficients with lin_comb(basis.seq, coeffs) = x."""
    coeffs = solve_in_span(basis.seq, x)
    if coeffs is None:
        raise ValueError("vector lies outside the span of the basis")
    return Coordinates(coeffs)


def change_of_basis(e: Frame, f: Frame) -> Tuple[Matrix, Matrix]:
    """The invertible matrix pair (A, A_inv) with f_j = sum_i A[i][j] e_i and
    e_j = sum_i A_inv[i][j] f_j; both products are checked against the
    identity before returning."""
    n = len(e)
    if len(f) != n:
        raise ValueError("frames must have equal length")
    cols_a = solve_many(e.seq, tuple(f.seq))
    if any(c is None for c in cols_a):
        raise ValueError("some f_j lies outside the span of e")
    cols_ainv = solve_many(f.seq, tuple(e.seq))
    if any(c is None for c in cols_ainv):
        raise NotAFrameError("some e_i is not reachable from f; inputs were not equal-span frames")
    field = e.field
    a = matrix(field, [[cols_a[j][i] for j in range(n)] for i in range(n)], cols=n)
    a_inv = matrix(field, [[cols_ainv[j][i] for j in range(n)] for i in range(n)], cols=n)
    if not mat_product(a, a_inv).is_identity() or not mat_product(a_inv, a).is_identity():
        raise AssertionError("change-of-basis pair failed the identity check")
    return a, a_inv
