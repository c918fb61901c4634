"""Generic linear codes over a finite field.

A LinearCode stores its generator matrix in reduced row echelon form, so two
codes with the same row space compare equal.  Distance and weight queries
enumerate all q^k codewords exactly, in lexicographic message order (leftmost
message symbol most significant, symbols ordered by element index), against a
hard codeword budget; there is no sampling and no estimation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import (
    BudgetExceeded,
    FieldMismatch,
    LengthMismatch,
    NoNonzeroCodeword,
    NotAnExtensionField,
    PreconditionError,
    ZeroTwistEntry,
)
from .fields import FieldElement, FiniteField, field_from_descriptor
from .linalg import MatrixF, _row_indices, kernel_basis, rref

DEFAULT_BUDGET = 10**7

# enumeration block size: suffix tables are capped at this many codewords
_BLOCK = 1 << 16


class TwistVector:
    """A length-n vector of nonzero field elements defining a monomial
    (diagonal) equivalence of codes."""

    __slots__ = ("field", "entries")

    def __init__(self, field: FiniteField, entries: Sequence):
        idx = _row_indices(field, entries)
        if any(i == 0 for i in idx):
            raise ZeroTwistEntry("twist vectors must have nonzero entries")
        self.field = field
        self.entries = tuple(idx)

    @classmethod
    def ones(cls, field: FiniteField, n: int) -> "TwistVector":
        return cls(field, [1] * n)

    def inverse(self) -> "TwistVector":
        F = self.field
        return TwistVector(F, [F.inv_idx(i) for i in self.entries])

    def elements(self) -> tuple:
        return tuple(FieldElement(self.field, i) for i in self.entries)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if isinstance(other, TwistVector):
            return self.field == other.field and self.entries == other.entries
        return NotImplemented

    def __repr__(self):
        return f"TwistVector({self.field!r}, {list(self.entries)})"


@dataclass(frozen=True)
class WeightProfile:
    """Codeword counts by Hamming weight, w_0 .. w_n."""

    counts: tuple

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, w: int) -> int:
        return self.counts[w]


class LinearCode:
    """A linear [n, k] code, canonicalized to an RREF generator matrix."""

    def __init__(self, field: FiniteField, rows: Sequence[Sequence], n: Optional[int] = None):
        data = [_row_indices(field, r) for r in rows]
        if data:
            widths = {len(r) for r in data}
            if len(widths) > 1:
                raise PreconditionError(f"row lengths differ: {sorted(widths)}")
            width = widths.pop()
            if n is not None and n != width:
                raise LengthMismatch(f"declared length {n} != row length {width}")
            n = width
        elif n is None:
            raise PreconditionError("zero code needs an explicit length")
        if n < 1:
            raise PreconditionError("code length must be >= 1")
        self.field = field
        self.n = n
        if data:
            R, rank, _ = rref(MatrixF(field, data))
            self.generator = tuple(tuple(r) for r in R.data[:rank])
        else:
            self.generator = ()
        self.k = len(self.generator)
        self._profile: Optional[WeightProfile] = None

    # -- basics ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LinearCode):
            return (
                self.field == other.field
                and self.n == other.n
                and self.generator == other.generator
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.n, self.generator))

    def __repr__(self):
        return f"LinearCode({self.field!r}, n={self.n}, k={self.k})"

    def generator_elements(self) -> tuple:
        F = self.field
        return tuple(tuple(FieldElement(F, x) for x in row) for row in self.generator)

    def contains(self, other: "LinearCode") -> bool:
        """Row-space containment: other is a subcode of self."""
        if self.field != other.field or self.n != other.n:
            return False
        if other.k == 0:
            return True
        stacked = MatrixF(self.field, list(self.generator) + list(other.generator))
        _, rank, _ = rref(stacked)
        return rank == self.k

    # -- duals and conjugation --------------------------------------------

    def dual_euclidean(self) -> "LinearCode":
        """The dual under the standard inner product sum(a_i * b_i)."""
        if self.k == 0:
            F = self.field
            eye = [[1 if i == j else 0 for j in range(self.n)] for i in range(self.n)]
            return LinearCode(F, eye)
        ker = kernel_basis(MatrixF(self.field, list(self.generator)))
        return LinearCode(self.field, ker, n=self.n)

    def _require_quadratic(self) -> int:
        F = self.field
        if F.base is None or F.rel_degree != 2:
            raise NotAnExtensionField(f"{F!r} is not a registered quadratic extension")
        return F.base.order

    def conjugate(self) -> "LinearCode":
        """Entrywise Frobenius x -> x^q over GF(q^2)."""
        q = self._require_quadratic()
        F = self.field
        rows = [[F.pow_idx(x, q) for x in row] for row in self.generator]
        return LinearCode(F, rows, n=self.n)

    def dual_hermitian(self) -> "LinearCode":
        """The dual under sum(a_i * b_i^q) over GF(q^2)."""
        self._require_quadratic()
        return self.conjugate().dual_euclidean()

    # -- constructions ------------------------------------------------------

    def schur_square(self) -> "LinearCode":
        """Span of all componentwise products of pairs of codewords."""
        F = self.field
        rows = []
        for i in range(self.k):
            for j in range(i, self.k):
                rows.append(
                    [F.mul_idx(a, b) for a, b in zip(self.generator[i], self.generator[j])]
                )
        return LinearCode(F, rows, n=self.n)

    def twist(self, v: TwistVector) -> "LinearCode":
        """Monomial equivalence: multiply column i by v_i."""
        if v.field != self.field:
            raise FieldMismatch("twist vector from a different field")
        if len(v) != self.n:
            raise LengthMismatch(f"twist length {len(v)} != code length {self.n}")
        F = self.field
        rows = [[F.mul_idx(x, vi) for x, vi in zip(row, v.entries)] for row in self.generator]
        return LinearCode(F, rows, n=self.n)

    def lift_to_extension(self, target: FiniteField) -> "LinearCode":
        """Same generator over the registered quadratic extension.

        Base elements keep their indices in the tower layout, so the lift is
        the identity on the generator entries.
        """
        if target.base != self.field:
            raise NotAnExtensionField(f"{target!r} does not extend {self.field!r}")
        return LinearCode(target, list(self.generator), n=self.n)

    # -- predicates -----------------------------------------------------------

    def is_self_orthogonal(self, mode: str = "euclidean") -> bool:
        """G * G^T == 0 (euclidean) or G * conj(G)^T == 0 (hermitian)."""
        if mode not in ("euclidean", "hermitian"):
            raise PreconditionError(f"unknown inner-product mode {mode!r}")
        F = self.field
        if mode == "hermitian":
            q = self._require_quadratic()
            other = [[F.pow_idx(x, q) for x in row] for row in self.generator]
        else:
            other = [list(row) for row in self.generator]
        for row in self.generator:
            for orow in other:
                acc = 0
                for a, b in zip(row, orow):
                    acc = F.add_idx(acc, F.mul_idx(a, b))
                if acc != 0:
                    return False
        assert 2 * self.k <= self.n, "self-orthogonal dimension exceeds n/2"
        return True

    # -- exhaustive enumeration ----------------------------------------------

    def _codeword_blocks(self, budget: Optional[int]) -> Iterator[tuple]:
        """Yield (first_message_index, block) over all q^k codewords.

        Blocks are int32 arrays of element indices, rows in lexicographic
        message order; block sizes are powers of q capped at _BLOCK.
        """
        F = self.field
        q, k, n = F.order, self.k, self.n
        total = q**k
        limit = DEFAULT_BUDGET if budget is None else budget
        if total > limit:
            raise BudgetExceeded(f"q^k = {total} exceeds the budget {limit}")
        if k == 0:
            yield 0, np.zeros((1, n), dtype=np.int32)
            return
        add = F.add_table
        mul = F.mul_table
        G = np.array(self.generator, dtype=np.int32)
        depth = 0
        while depth < k and q ** (depth + 1) <= _BLOCK:
            depth += 1
        suffix = np.zeros((1, n), dtype=np.int32)
        for r in range(k - depth, k):
            mults = mul[np.arange(q, dtype=np.int32)[:, None], G[r][None, :]]
            suffix = add[suffix[:, None, :], mults[None, :, :]].reshape(-1, n)
        block_size = q**depth
        scale = [q ** (k - depth - 1 - t) for t in range(k - depth)]
        for p in range(total // block_size):
            acc = np.zeros(n, dtype=np.int32)
            for t, s in enumerate(scale):
                digit = (p // s) % q
                if digit:
                    acc = add[acc, mul[digit, G[t]]]
            yield p * block_size, add[acc[None, :], suffix]

    def weight_profile(self, budget: Optional[int] = None) -> WeightProfile:
        """Exact codeword counts by Hamming weight, over all q^k messages."""
        if self._profile is not None:
            return self._profile
        counts = np.zeros(self.n + 1, dtype=np.int64)
        for _, block in self._codeword_blocks(budget):
            w = np.count_nonzero(block, axis=1)
            counts += np.bincount(w, minlength=self.n + 1)
        self._profile = WeightProfile(tuple(int(c) for c in counts))
        return self._profile

    def min_distance(self, budget: Optional[int] = None) -> int:
        """Exact minimum nonzero weight, by full enumeration."""
        profile = self.weight_profile(budget)
        for w in range(1, self.n + 1):
            if profile[w] > 0:
                return w
        raise NoNonzeroCodeword("the zero code has no minimum distance")

    def count_full_weight(self, budget: Optional[int] = None) -> int:
        """Exact number of codewords with no zero coordinate."""
        return self.weight_profile(budget)[self.n]

    def full_weight_search(self, budget: Optional[int] = None) -> Optional[tuple]:
        """First codeword (in message order) with no zero coordinate.

        Returns a tuple of field elements, or None when no such codeword
        exists.
        """
        F = self.field
        for start, block in self._codeword_blocks(budget):
            w = np.count_nonzero(block, axis=1)
            hits = np.flatnonzero(w == self.n)
            if hits.size:
                row = block[hits[0]]
                return tuple(FieldElement(F, int(x)) for x in row)
        return None

    # -- serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        F = self.field
        return {
            "field": F.descriptor(),
            "n": self.n,
            "k": self.k,
            "generator": [[F.prime_coeffs(x) for x in row] for row in self.generator],
        }


def from_generator(field: FiniteField, rows: Sequence[Sequence], n: Optional[int] = None) -> LinearCode:
    """Build a code from spanning rows; dependent rows are dropped."""
    return LinearCode(field, rows, n=n)


def code_from_dict(d: dict) -> LinearCode:
    field = field_from_descriptor(d["field"])
    rows = [[field.from_prime_coeffs(c).index for c in row] for row in d["generator"]]
    code = LinearCode(field, rows, n=d["n"])
    if code.k != d["k"]:
        raise PreconditionError(f"stored dimension {d['k']} != recomputed {code.k}")
    return code
