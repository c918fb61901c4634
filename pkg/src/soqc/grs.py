"""Generalized Reed-Solomon codes and their self-orthogonal twists.

A GRS code evaluates polynomials of degree < k at distinct points of GF(q),
with nonzero column multipliers.  The dual of a twisted GRS code is again a
GRS code on the same points; the dual twist vector comes from the closed
form 1 / (v_i * prod(a_i - a_j)) and is cross-checked against the null space
of the moment system it must satisfy.

A full-weight dual codeword is exhibited by evaluating an irreducible
quadratic, and its componentwise square roots (characteristic 2) or norm
roots (any characteristic, over GF(q^2)) give a twist making the code
Euclidean or Hermitian self-orthogonal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .codes import LinearCode, TwistVector
from .errors import (
    DimensionTooLarge,
    OddCharacteristic,
    PreconditionError,
    RepeatedPoints,
)
from .fields import (
    FieldElement,
    FiniteField,
    embed,
    norm_root,
    poly_eval,
    quadratic_extension,
    sqrt_char2,
)
from .linalg import MatrixF, _row_indices, kernel_basis


@dataclass(frozen=True)
class GrsSpec:
    """Evaluation points, column twist and dimension of a GRS code."""

    field: FiniteField
    points: tuple
    twist: TwistVector
    k: int

    def __post_init__(self):
        idx = _row_indices(self.field, self.points)
        object.__setattr__(self, "points", tuple(idx))
        if len(set(idx)) != len(idx):
            raise RepeatedPoints("evaluation points must be pairwise distinct")
        if not idx:
            raise PreconditionError("need at least one evaluation point")
        if self.twist.field != self.field or len(self.twist) != len(idx):
            raise PreconditionError("twist must match the points in field and length")
        if not 1 <= self.k <= len(idx):
            raise PreconditionError(f"dimension k={self.k} outside 1..{len(idx)}")

    @property
    def n(self) -> int:
        return len(self.points)

    def to_dict(self) -> dict:
        F = self.field
        return {
            "field": F.descriptor(),
            "points": [F.prime_coeffs(a) for a in self.points],
            "twist": [F.prime_coeffs(v) for v in self.twist.entries],
            "k": self.k,
        }


def make_grs_spec(
    field: FiniteField, points: Sequence, k: int, twist: TwistVector | None = None
) -> GrsSpec:
    if twist is None:
        twist = TwistVector.ones(field, len(list(points)))
    return GrsSpec(field, tuple(points), twist, k)


def grs_code(spec: GrsSpec) -> LinearCode:
    """Generator rows (v_1 a_1^j, ..., v_n a_n^j), j = 0..k-1; MDS [n, k, n-k+1]."""
    F = spec.field
    rows = []
    for j in range(spec.k):
        rows.append(
            [F.mul_idx(v, F.pow_idx(a, j)) for a, v in zip(spec.points, spec.twist.entries)]
        )
    return LinearCode(F, rows, n=spec.n)


def dual_twist_vector(field: FiniteField, points: Sequence, twist: TwistVector | None = None) -> TwistVector:
    """Column multipliers of the dual GRS code on the same points.

    Entries are c / (v_i * prod_{j != i} (a_i - a_j)), scaled so the leading
    entry is 1 (matching the leading-one kernel-basis convention).  The
    result is verified against the null space of the (n-1) x n moment matrix
    rows (v_i * a_i^r), which is one-dimensional with all-nonzero solutions.
    """
    pts = _row_indices(field, points)
    if len(set(pts)) != len(pts):
        raise RepeatedPoints("evaluation points must be pairwise distinct")
    n = len(pts)
    if twist is None:
        twist = TwistVector.ones(field, n)
    F = field
    raw = []
    for i, ai in enumerate(pts):
        prod = 1
        for j, aj in enumerate(pts):
            if j != i:
                prod = F.mul_idx(prod, F.sub_idx(ai, aj))
        raw.append(F.inv_idx(F.mul_idx(twist.entries[i], prod)))
    lead_inv = F.inv_idx(raw[0])
    entries = [F.mul_idx(lead_inv, w) for w in raw]
    if n > 1:
        system = MatrixF(
            F,
            [
                [F.mul_idx(v, F.pow_idx(a, r)) for a, v in zip(pts, twist.entries)]
                for r in range(n - 1)
            ],
        )
        basis = kernel_basis(system)
        assert len(basis) == 1 and basis[0] == entries, (
            "closed-form dual twist disagrees with the moment-system kernel"
        )
    return TwistVector(F, entries)


def smallest_irreducible_quadratic(field: FiniteField) -> tuple:
    """Monic irreducible x^2 + c1*x + c0 with the smallest (c1, c0) encoding.

    Candidates are scanned with the constant coefficient varying fastest;
    irreducibility of a quadratic is an exhaustive root check.
    """
    for c1, c0 in itertools.product(range(field.order), repeat=2):
        if all(
            poly_eval(field, (c0, c1, 1), x) != 0 for x in range(field.order)
        ):
            return (c0, c1, 1)
    raise AssertionError("irreducible quadratics exist over every finite field")


def quadratic_full_weight(
    field: FiniteField, points: Sequence, dual_twist: TwistVector, k: int
) -> tuple:
    """A codeword with no zero coordinate in the dual of GRS_{2k-1}.

    Evaluates the smallest monic irreducible quadratic f at the points and
    scales by the dual twist; f has no roots, so every coordinate is
    nonzero.  Requires n - 2k >= 2 so that deg f fits the dual dimension.
    """
    pts = _row_indices(field, points)
    n = len(pts)
    if n - 2 * k < 2:
        raise DimensionTooLarge(f"need n - 2k >= 2, got n={n}, k={k}")
    f = smallest_irreducible_quadratic(field)
    F = field
    u = [
        F.mul_idx(v, poly_eval(F, f, a)) for a, v in zip(pts, dual_twist.entries)
    ]
    assert all(x != 0 for x in u)
    return tuple(FieldElement(F, x) for x in u)


def euclidean_so_grs(field: FiniteField, points: Sequence, k: int) -> tuple:
    """Twist GRS_k(points, 1) into a Euclidean self-orthogonal code.

    Only valid in characteristic 2, where every element has a square root;
    returns (twist, code) with the twist entries v_i satisfying
    v_i^2 = u_i for a full-weight codeword u of the dual of GRS_{2k-1}.
    """
    if field.p != 2:
        raise OddCharacteristic(
            "the Euclidean pipeline needs even characteristic; "
            "odd characteristic fails because dual kernel entries can be non-squares"
        )
    vprime = dual_twist_vector(field, points)
    u = quadratic_full_weight(field, points, vprime, k)
    v = TwistVector(field, [sqrt_char2(x) for x in u])
    code = grs_code(make_grs_spec(field, points, k)).twist(v)
    assert code.is_self_orthogonal("euclidean")
    return v, code


def hermitian_so_grs(field: FiniteField, points: Sequence, k: int) -> tuple:
    """Twist the GF(q^2)-lift of GRS_k into a Hermitian self-orthogonal code.

    Works in any characteristic: the norm map of GF(q^2)/GF(q) is onto, so
    each u_i has a (q+1)-st root v_i.  Returns (twist over GF(q^2), code).
    """
    ext = quadratic_extension(field)
    vprime = dual_twist_vector(field, points)
    u = quadratic_full_weight(field, points, vprime, k)
    v = TwistVector(ext, [norm_root(embed(x, ext)) for x in u])
    code = grs_code(make_grs_spec(field, points, k)).lift_to_extension(ext).twist(v)
    assert code.is_self_orthogonal("hermitian")
    return v, code
