"""Evaluation codes on elliptic curves over small fields.

Curves are given in general Weierstrass form so characteristics 2 and 3
work.  Rational points come from an exhaustive coordinate scan.  The
function space attached to m times the point at infinity has the monomial
basis {x^i y^j : j <= 1, 2i + 3j <= m}, ordered by pole order; evaluating it
at affine points gives an [n, m] code for 1 <= m < n.

Self-orthogonalization replaces any divisor-class existence argument with an
honest exhaustive search: a full-weight codeword in the dual of the code of
componentwise products supplies the twist, or the search reports absence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .codes import LinearCode, TwistVector
from .errors import (
    DegreeOutOfRange,
    DuplicatePoints,
    FieldMismatch,
    InfinityInSupport,
    OddCharacteristic,
    PreconditionError,
    SingularCurve,
)
from .fields import FieldElement, FiniteField, embed, norm_root, quadratic_extension, sqrt_char2


@dataclass(frozen=True)
class CurvePoint:
    """An affine rational point (x, y), or the point at infinity."""

    x: Optional[FieldElement]
    y: Optional[FieldElement]

    @classmethod
    def infinity(cls) -> "CurvePoint":
        return cls(None, None)

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def to_json(self):
        if self.is_infinity:
            return "infinity"
        return {"x": list(self.x.prime_coeffs), "y": list(self.y.prime_coeffs)}

    def __repr__(self):
        if self.is_infinity:
            return "CurvePoint(infinity)"
        return f"CurvePoint({self.x.index}, {self.y.index})"


class EllipticCurve:
    """y^2 + a1*xy + a3*y = x^3 + a2*x^2 + a4*x + a6 over a finite field."""

    def __init__(self, field: FiniteField, a1, a2, a3, a4, a6):
        self.field = field
        coeffs = []
        for c in (a1, a2, a3, a4, a6):
            if isinstance(c, FieldElement):
                if c.field != field:
                    raise FieldMismatch("curve coefficient from a different field")
                coeffs.append(c)
            else:
                coeffs.append(field(int(c)))
        self.a1, self.a2, self.a3, self.a4, self.a6 = coeffs
        if not self.discriminant():
            raise SingularCurve("zero discriminant")

    def discriminant(self) -> FieldElement:
        F = self.field
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        c = F.from_int
        b2 = a1 * a1 + c(4) * a2
        b4 = c(2) * a4 + a1 * a3
        b6 = a3 * a3 + c(4) * a6
        b8 = a1 * a1 * a6 + c(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return (
            -(b2 * b2 * b8) - c(8) * b4 * b4 * b4 - c(27) * b6 * b6 + c(9) * b2 * b4 * b6
        )

    def contains(self, x: FieldElement, y: FieldElement) -> bool:
        lhs = y * y + self.a1 * x * y + self.a3 * y
        rhs = x * x * x + self.a2 * x * x + self.a4 * x + self.a6
        return lhs == rhs

    def points(self) -> list:
        """All rational points: infinity first, then affine points in
        (x, y) index order.  The count is asserted to lie in the Hasse-Weil
        window |N - (q+1)| <= 2*sqrt(q)."""
        F = self.field
        pts = [CurvePoint.infinity()]
        for xi in range(F.order):
            x = F(xi)
            for yi in range(F.order):
                y = F(yi)
                if self.contains(x, y):
                    pts.append(CurvePoint(x, y))
        n = len(pts)
        q = F.order
        assert (n - (q + 1)) ** 2 <= 4 * q, "point count outside the Hasse-Weil window"
        return pts

    def affine_points(self) -> list:
        return [P for P in self.points() if not P.is_infinity]

    def to_dict(self) -> dict:
        F = self.field
        return {
            "field": F.descriptor(),
            "a": [c.index for c in (self.a1, self.a2, self.a3, self.a4, self.a6)],
        }

    def __repr__(self):
        a = [c.index for c in (self.a1, self.a2, self.a3, self.a4, self.a6)]
        return f"EllipticCurve({self.field!r}, a={a})"


def curve(field: FiniteField, a1, a2, a3, a4, a6) -> EllipticCurve:
    return EllipticCurve(field, a1, a2, a3, a4, a6)


def curve_from_dict(d: dict) -> EllipticCurve:
    from .fields import field_from_descriptor

    F = field_from_descriptor(d["field"])
    return EllipticCurve(F, *d["a"])


@dataclass(frozen=True)
class RrBasis:
    """Monomials x^i y^j spanning the functions with pole order <= m at
    infinity; exactly m of them, with pairwise distinct pole orders."""

    curve: EllipticCurve
    m: int
    monomials: tuple  # (i, j) pairs ordered by pole order 2i + 3j


def rr_basis(E: EllipticCurve, m: int) -> RrBasis:
    if m < 1:
        raise DegreeOutOfRange("pole order bound must be >= 1")
    monos = [
        (i, j)
        for j in (0, 1)
        for i in range(m + 1)
        if 2 * i + 3 * j <= m
    ]
    monos.sort(key=lambda ij: 2 * ij[0] + 3 * ij[1])
    assert len(monos) == m, "genus-1 function space dimension must equal m"
    return RrBasis(E, m, tuple(monos))


def _eval_monomial(i: int, j: int, P: CurvePoint) -> FieldElement:
    return P.x**i * P.y**j


def elliptic_code(E: EllipticCurve, S: Sequence[CurvePoint], m: int) -> LinearCode:
    """Evaluate the pole-order basis at the affine points S: an [n, m] code
    with minimum distance >= n - m."""
    pts = list(S)
    if any(P.is_infinity for P in pts):
        raise InfinityInSupport("evaluation points must avoid the point at infinity")
    if len(set((P.x.index, P.y.index) for P in pts)) != len(pts):
        raise DuplicatePoints("evaluation points must be pairwise distinct")
    for P in pts:
        if not E.contains(P.x, P.y):
            raise PreconditionError(f"{P!r} is not on the curve")
    n = len(pts)
    if not 1 <= m < n:
        raise DegreeOutOfRange(f"need 1 <= m < n, got m={m}, n={n}")
    basis = rr_basis(E, m)
    rows = [[_eval_monomial(i, j, P) for P in pts] for (i, j) in basis.monomials]
    code = LinearCode(E.field, rows, n=n)
    assert code.k == m, "evaluation rows of the pole-order basis must be independent"
    return code


def so_elliptic(
    E: EllipticCurve,
    S: Sequence[CurvePoint],
    m: int,
    mode: str = "hermitian",
    budget: Optional[int] = None,
) -> Optional[tuple]:
    """Search for a twist making the elliptic code self-orthogonal.

    Builds the code C of degree m, the span Cs of its componentwise
    products, and exhaustively searches the Euclidean dual of Cs for a
    codeword u with no zero coordinate.  On success the componentwise square
    roots (euclidean mode, characteristic 2) or norm roots (hermitian mode,
    over GF(q^2)) of u twist C into a self-orthogonal code; returns
    (twist, code), or None when the search finds nothing.
    """
    if mode not in ("euclidean", "hermitian"):
        raise PreconditionError(f"unknown inner-product mode {mode!r}")
    F = E.field
    if mode == "euclidean" and F.p != 2:
        raise OddCharacteristic("the Euclidean twist step needs even characteristic")
    C = elliptic_code(E, S, m)
    dual = C.schur_square().dual_euclidean()
    u = dual.full_weight_search(budget)
    if u is None:
        return None
    if mode == "euclidean":
        v = TwistVector(F, [sqrt_char2(x) for x in u])
        code = C.twist(v)
    else:
        ext = quadratic_extension(F)
        v = TwistVector(ext, [norm_root(embed(x, ext)) for x in u])
        code = C.lift_to_extension(ext).twist(v)
    assert code.is_self_orthogonal(mode)
    return v, code
