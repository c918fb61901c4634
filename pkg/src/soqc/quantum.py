"""Quantum code parameters from classical self-orthogonal codes, plus the
finite-length counting bounds and asymptotic rate formulas.

A Euclidean self-orthogonal [n, k] code with dual distance d gives a
q-ary [[n, n-2k, d]] quantum code; a Hermitian self-orthogonal [n, k] code
over GF(q^2) gives the same over the q-ary alphabet.  The quantum Singleton
bound n >= k + 2d - 2 is checked on every derived parameter set.

The counting side evaluates, for an evaluation code of degree m on n points
of a genus-g curve, a lower bound on the number of full-weight dual
codewords and the degree threshold below which that bound is positive.  Two
threshold variants are exposed: the "stated" one with log_q(1 + 2/q) and the
"derived" one with log_q((q+1)/(q-1)), which is the exact positivity
condition of the bound; they differ, and the census checks use the derived
one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .codes import LinearCode
from .errors import (
    BudgetExceeded,
    DomainError,
    DualDistanceMismatch,
    NotASquare,
    NotSelfOrthogonal,
    PreconditionError,
)

THRESHOLD_VARIANTS = ("stated", "derived")


@dataclass(frozen=True)
class QuantumParams:
    """[[n, k, d]]_q parameters with construction provenance."""

    q: int
    n: int
    k: int
    d: int
    construction: str  # "css-euclidean" or "hermitian"

    def __post_init__(self):
        if self.n < 1 or not 0 <= self.k <= self.n or self.d < 1:
            raise PreconditionError(f"invalid parameters [[{self.n},{self.k},{self.d}]]")
        if self.singleton_defect < 0:
            raise PreconditionError(
                f"[[{self.n},{self.k},{self.d}]]_{self.q} violates the quantum Singleton bound"
            )

    @property
    def singleton_defect(self) -> int:
        return self.n - self.k - 2 * self.d + 2

    @property
    def is_mds(self) -> bool:
        return self.singleton_defect == 0

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "construction": self.construction,
            "singleton_defect": self.singleton_defect,
            "mds": self.is_mds,
        }

    def __repr__(self):
        return f"[[{self.n},{self.k},{self.d}]]_{self.q}"


def _checked_dual_distance(
    dual: LinearCode, claimed: int, budget: Optional[int]
) -> None:
    try:
        actual = dual.min_distance(budget)
    except BudgetExceeded:
        return
    if actual != claimed:
        raise DualDistanceMismatch(f"claimed dual distance {claimed}, enumerated {actual}")


def quantum_from_euclidean(
    C: LinearCode, d_dual: int, budget: Optional[int] = None
) -> QuantumParams:
    """[[n, n-2k, d_dual]]_q from a Euclidean self-orthogonal [n, k] code.

    The supplied dual distance is re-verified by enumeration whenever
    q^(n-k) fits the budget.
    """
    if not C.is_self_orthogonal("euclidean"):
        raise NotSelfOrthogonal("the code is not Euclidean self-orthogonal")
    _checked_dual_distance(C.dual_euclidean(), d_dual, budget)
    return QuantumParams(C.field.order, C.n, C.n - 2 * C.k, d_dual, "css-euclidean")


def quantum_from_hermitian(
    C: LinearCode, d_dual: int, budget: Optional[int] = None
) -> QuantumParams:
    """[[n, n-2k, d_dual]]_q from a Hermitian self-orthogonal code over GF(q^2)."""
    if not C.is_self_orthogonal("hermitian"):
        raise NotSelfOrthogonal("the code is not Hermitian self-orthogonal")
    _checked_dual_distance(C.dual_hermitian(), d_dual, budget)
    return QuantumParams(C.field.base.order, C.n, C.n - 2 * C.k, d_dual, "hermitian")


def full_weight_threshold(q: int, n: int, g: int = 0, variant: str = "derived") -> float:
    """Degree threshold below which a full-weight dual codeword is guaranteed.

    The genus cancels out of the positivity condition of
    :func:`full_weight_count_bound`, so g does not enter either variant; it
    is accepted for interface symmetry with the count bound.
    """
    if q < 2 or n < 1 or g < 0:
        raise DomainError("need q >= 2, n >= 1, g >= 0")
    if variant == "stated":
        ratio = 1.0 + 2.0 / q
    elif variant == "derived":
        ratio = (q + 1.0) / (q - 1.0)
    else:
        raise DomainError(f"unknown variant {variant!r}; expected one of {THRESHOLD_VARIANTS}")
    return 0.5 * (n - 1 - n * math.log(ratio, q))


def full_weight_count_bound(q: int, n: int, m: int, g: int = 0) -> float:
    """Lower bound on the number of full-weight codewords in the dual of a
    degree-2m evaluation code on n points of a genus-g curve:
    q^(n-2m+g-1) * (1-1/q)^n - q^g * (1+1/q)^n."""
    if q < 2 or n < 1 or g < 0:
        raise DomainError("need q >= 2, n >= 1, g >= 0")
    return float(q) ** (n - 2 * m + g - 1) * (1.0 - 1.0 / q) ** n - float(q) ** g * (
        1.0 + 1.0 / q
    ) ** n


def q_ary_entropy(q: int, delta: float) -> float:
    """delta*log_q(q-1) - delta*log_q(delta) - (1-delta)*log_q(1-delta)."""
    if q < 2:
        raise DomainError("entropy needs q >= 2")
    if not 0.0 < delta < 1.0:
        raise DomainError(f"entropy argument {delta} outside (0, 1)")
    lq = math.log(q)
    return (
        delta * math.log(q - 1) / lq
        - delta * math.log(delta) / lq
        - (1.0 - delta) * math.log(1.0 - delta) / lq
    )


def gv_rate(q: int, delta: float) -> float:
    """Gilbert-Varshamov-style quantum rate 1 - delta*log_q(q+1) - H_q(delta),
    valid for delta in (0, 1/2)."""
    if not 0.0 < delta < 0.5:
        raise DomainError(f"rate argument {delta} outside (0, 1/2)")
    return 1.0 - delta * math.log(q + 1) / math.log(q) - q_ary_entropy(q, delta)


def _square_prime_power_root(q: int) -> int:
    s = math.isqrt(q)
    if s * s != q or s < 2:
        raise NotASquare(f"{q} is not a square")
    p = 2
    n = q
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            if n != 1:
                raise NotASquare(f"{q} is not a prime power")
            return s
        p += 1
    return s  # q itself prime: cannot be a square >= 4, caught above


def ag_rate(q: int, delta: float) -> float:
    """Rate from asymptotically optimal curve families over square q:
    1 - 2*delta - 2/(sqrt(q) - 1)."""
    s = _square_prime_power_root(q)
    if delta <= 0.0:
        raise DomainError(f"rate argument {delta} must be positive")
    return 1.0 - 2.0 * delta - 2.0 / (s - 1.0)


@dataclass(frozen=True)
class RatePoint:
    """One point of a rate/relative-distance curve."""

    q: int
    delta: float
    rate: float
