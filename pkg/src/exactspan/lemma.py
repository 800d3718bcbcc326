"""Executable form of the inclusion lemma and the frame-extension theorem.

``verify_basic_lemma`` produces a coefficient matrix certifying that each
vector of one frame lies in the span of another; ``check_certificate``
re-validates such a certificate by substitution alone, so its trust base
is disjoint from the elimination engine.  ``trace_induction`` reproduces
the kernel-based inductive argument level by level, computing an explicit
nonzero kernel witness where the classical proof argues by contradiction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .core import (
    Matrix,
    VecSequence,
    Vector,
    lin_comb,
    matrix,
    zero_vector,
)
from .field import Field
from .core import kernel_basis, solve_many
from .spans import (
    Frame,
    NotAFrameError,
    Subspace,
    coordinates,
    rank_seq,
    span_of,
)


@dataclass(frozen=True)
class LinearMap:
    """The unique linear extension of domain_frame[j] |-> images[j]."""

    domain_frame: Frame
    images: VecSequence

    def __post_init__(self) -> None:
        if len(self.images) != len(self.domain_frame):
            raise ValueError("one image per domain frame vector required")
        if self.images.field != self.domain_frame.field:
            raise ValueError("image field mismatch")

    @property
    def field(self) -> Field:
        return self.domain_frame.field


def build_annihilating_map(e: Frame, f: Frame, i: int) -> LinearMap:
    """The map sending e[j] to f[j] for j != i and e[i] to zero (0-based i)."""
    n = len(e)
    if len(f) != n:
        raise ValueError("frames must have equal length")
    if not 0 <= i < n:
        raise IndexError(f"index {i} out of range for frames of length {n}")
    e_span = span_of(e.seq)
    if not e_span.contains_seq(f.seq):
        raise ValueError("f is not contained in the span of e")
    zero = zero_vector(f.field, f.ambient_dim)
    images = tuple(zero if j == i else f[j] for j in range(n))
    return LinearMap(e, VecSequence(f.field, f.ambient_dim, images))


def apply_map(lmap: LinearMap, x: Vector) -> Vector:
    coords = coordinates(lmap.domain_frame, x)
    return lin_comb(lmap.images, tuple(coords))


def restricted_kernel_witness(lmap: LinearMap, sub: Subspace) -> Optional[Vector]:
    """A nonzero vector of ``sub`` annihilated by ``lmap``, or None when the
    restriction is injective.

    The witness is normalized so its leading nonzero coordinate in the
    domain frame is one, which makes traces deterministic.
    """
    dom_span = span_of(lmap.domain_frame.seq)
    if not dom_span.contains_seq(sub.canonical_basis):
        raise ValueError("subspace is not contained in the domain span")
    basis = sub.canonical_basis
    if len(basis) == 0:
        return None
    images = [apply_map(lmap, b) for b in basis]
    cols = matrix(
        lmap.field,
        [[img.entries[i] for img in images] for i in range(images[0].ambient_dim)],
        cols=len(images),
    )
    ker = kernel_basis(cols)
    if len(ker) == 0:
        return None
    witness = lin_comb(basis, ker[0].entries)
    dom_coords = tuple(coordinates(lmap.domain_frame, witness))
    lead = next(c for c in dom_coords if c)
    return witness.scale(lead.inverse())


@dataclass(frozen=True)
class InclusionCertificate:
    """Coefficients proving e[i] = sum_j C[j][i] f[j] for every i; checkable
    by substitution only."""

    e: Frame
    f: Frame
    coefficient_matrix: Matrix


def verify_basic_lemma(e: Frame, f: Frame) -> InclusionCertificate:
    """Resolve the inclusion system 'every e[i] lies in the span of f' for
    equal-length frames with f contained in span(e)."""
    n = len(e)
    if len(f) != n:
        raise ValueError("frames must have equal length")
    if not span_of(e.seq).contains_seq(f.seq):
        raise ValueError("f is not contained in the span of e")
    cols = solve_many(f.seq, tuple(e.seq))
    if any(c is None for c in cols):
        raise NotAFrameError("inclusion system unsolvable; inputs were not valid frames")
    c = matrix(e.field, [[cols[i][j] for i in range(n)] for j in range(n)], cols=n)
    return InclusionCertificate(e, f, c)


def check_certificate(cert: InclusionCertificate) -> bool:
    """Substitution-only validation: no solving, no elimination."""
    try:
        e, f, c = cert.e, cert.f, cert.coefficient_matrix
        n = len(e)
        if len(f) != n or c.rows != n or c.cols != n:
            return False
        for i in range(n):
            acc = zero_vector(e.field, e.ambient_dim)
            for j in range(n):
                acc = acc + f[j].scale(c[(j, i)])
            if acc != e[i]:
                return False
        return True
    except Exception:
        return False


@dataclass(frozen=True)
class TraceLevel:
    """One induction level: the active frames, the annihilating maps, the
    kernel witness found for each of them, and the inclusion coefficients
    derived at this level."""

    rank: int
    e: Frame
    f: Frame
    maps: Tuple[LinearMap, ...]
    witnesses: Tuple[Vector, ...]
    coefficient_matrix: Matrix


@dataclass(frozen=True)
class ProofTrace:
    levels: Tuple[TraceLevel, ...]

    @property
    def final_certificate(self) -> InclusionCertificate:
        last = self.levels[-1]
        return InclusionCertificate(last.e, last.f, last.coefficient_matrix)


def _level_instance(e: Frame, f: Frame, k: int) -> Tuple[Frame, Frame]:
    """Sub-instance at induction level k: the k-prefix of f paired with the
    canonical frame of its span; the top level is the original pair."""
    if k == len(f):
        return e, f
    fk = Frame(VecSequence(f.field, f.ambient_dim, f.seq.items[:k]))
    ek = Frame(span_of(fk.seq).canonical_basis)
    return ek, fk


def trace_induction(e: Frame, f: Frame) -> ProofTrace:
    """Replay the inductive proof of the inclusion system, one level per
    rank from 1 to n; the top level works on the original frames and its
    coefficients agree with verify_basic_lemma."""
    n = len(e)
    if len(f) != n:
        raise ValueError("frames must have equal length")
    if n == 0:
        raise ValueError("empty frames have no inclusion system")
    if not span_of(e.seq).contains_seq(f.seq):
        raise ValueError("f is not contained in the span of e")
    levels: List[TraceLevel] = []
    for k in range(1, n + 1):
        ek, fk = _level_instance(e, f, k)
        fk_span = span_of(fk.seq)
        if k == 1:
            lam = coordinates(fk, ek[0])
            cmat = matrix(e.field, [[lam.coeffs[0]]], cols=1)
            levels.append(TraceLevel(1, ek, fk, (), (), cmat))
            continue
        maps: List[LinearMap] = []
        witnesses: List[Vector] = []
        cols = []
        for i in range(k):
            lmap = build_annihilating_map(ek, fk, i)
            witness = restricted_kernel_witness(lmap, fk_span)
            if witness is None:
                raise NotAFrameError(
                    "restriction has trivial kernel; inputs were not valid frames"
                )
            maps.append(lmap)
            witnesses.append(witness)
            # normalized witness is exactly ek[i]; its f-coordinates give
            # column i of the inclusion matrix
            cols.append(tuple(coordinates(fk, witness)))
        cmat = matrix(e.field, [[cols[i][j] for i in range(k)] for j in range(k)], cols=k)
        levels.append(TraceLevel(k, ek, fk, tuple(maps), tuple(witnesses), cmat))
    return ProofTrace(tuple(levels))


def steinitz_extend(basis: Frame, fr: Frame) -> Tuple[Frame, Tuple[int, ...], int]:
    """Extend the frame ``fr`` to a basis by a left-to-right scan of
    ``basis``; the number of picked vectors always equals the codimension
    of the frame's span."""
    m = basis.ambient_dim
    if fr.ambient_dim != m or fr.field != basis.field:
        raise ValueError("ambient space mismatch")
    if len(basis) != m:
        raise NotAFrameError("first argument must be a basis of the full space")
    current = fr.seq
    r_current = len(fr)
    picked: List[int] = []
    for idx, v in enumerate(basis):
        candidate = current.append(v)
        if rank_seq(candidate) > r_current:
            current = candidate
            r_current += 1
            picked.append(idx)
    extended = Frame(current)
    l = m - len(fr)
    if len(picked) != l or rank_seq(current) != m:
        raise AssertionError("frame extension failed to reach a basis")
    return extended, tuple(picked), len(picked)


def rank_bound_check(base: VecSequence, derived: VecSequence) -> bool:
    """Soundness canary: sequences of combinations of n vectors never exceed
    rank n.  A False return signals an internal bug, not a property of the
    input."""
    base_span = span_of(base)
    for v in derived:
        if not base_span.contains(v):
            raise ValueError("derived vector outside the span of the base sequence")
    return rank_seq(derived) <= rank_seq(base) <= len(base)
