"""Exact arithmetic in small finite fields GF(p^m) and their quadratic extensions.

A field is either a prime field GF(p) or an extension of an explicit base
field by a monic irreducible modulus.  GF(p^m) is built over GF(p); the
quadratic extension GF(q^2) is always built over an explicit GF(q) object
(tower form), so membership in the base subfield is a coefficient check and
the base embeds at identical element indices.

Elements are identified by an integer index in [0, q).  The index encodes
the coefficient vector over the base field little-endian:
``index = sum(digit_i * q_base**i)``, so index 0 is zero, index 1 is one,
and for prime fields the index is the residue itself.  All "smallest
element" conventions in this package (generator choice, deterministic
searches, message enumeration order) refer to this index order.

Every field lazily builds full addition/multiplication lookup tables plus
log/exp tables for its multiplicative group; fields here stay at desk scale
(q <= a few thousand), where table building is exhaustive and exact.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    InvalidBaseOrder,
    NoRegisteredEmbedding,
    NonPrimeCharacteristic,
    NotAnExtensionField,
    NotInBaseField,
    OddCharacteristic,
    PreconditionError,
    ReducibleModulus,
    ZeroInput,
)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class FieldElement:
    """An element of a :class:`FiniteField`, identified by its index.

    Immutable.  Arithmetic between elements of distinct fields is rejected;
    apply :func:`embed` first.  Integer operands are not coerced.
    """

    __slots__ = ("field", "index")

    def __init__(self, field: "FiniteField", index: int):
        if not 0 <= index < field.order:
            raise PreconditionError(f"element index {index} out of range for {field!r}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "index", index)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.add_idx(self.index, other.index))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.sub_idx(self.index, other.index))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul_idx(self.index, other.index))

    def __truediv__(self, other):
        self._check(other)
        if other.index == 0:
            raise DivisionByZero("division by the zero element")
        return FieldElement(
            self.field, self.field.mul_idx(self.index, self.field.inv_idx(other.index))
        )

    def __pow__(self, exponent: int):
        return FieldElement(self.field, self.field.pow_idx(self.index, exponent))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_idx(self.index))

    def inverse(self) -> "FieldElement":
        if self.index == 0:
            raise DivisionByZero("zero has no multiplicative inverse")
        return FieldElement(self.field, self.field.inv_idx(self.index))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.index == other.index
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.index))

    def __bool__(self):
        return self.index != 0

    @property
    def coeffs(self) -> tuple:
        """Coefficients over the base field, low degree first."""
        f = self.field
        if f.base is None:
            return (self.index,)
        return tuple(FieldElement(f.base, d) for d in f.digits(self.index))

    @property
    def prime_coeffs(self) -> tuple:
        """Flattened coefficient vector over GF(p), low degree first."""
        return tuple(self.field.prime_coeffs(self.index))

    def __repr__(self):
        return f"{self.field!r}({self.index})"


class FiniteField:
    """A finite field GF(p^m), optionally built as an extension tower.

    Do not instantiate directly; use :func:`make_field`,
    :func:`extension_field` or :func:`quadratic_extension`, which validate
    inputs and cache constructed fields.
    """

    def __init__(self, p: int, base: Optional["FiniteField"], modulus: tuple):
        # modulus: monic coefficient tuple over the base (or over GF(p) if
        # base is None, where it is the formal (0, 1) of a prime field),
        # low degree first, including the leading 1.
        self.p = p
        self.base = base
        self.modulus = tuple(int(c) for c in modulus)
        self.rel_degree = len(self.modulus) - 1
        if base is None:
            self.degree = 1
            self.order = p
        else:
            self.degree = base.degree * self.rel_degree
            self.order = base.order ** self.rel_degree
        self._key = (p, None if base is None else base._key, self.modulus)
        self._tables_built = False
        self._exp: list = []
        self._log: list = []
        self._add = None
        self._mul = None
        self._neg = None
        self._inv = None

    # -- identity ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, FiniteField):
            return self._key == other._key
        return NotImplemented

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"GF({self.order})"

    # -- element access --------------------------------------------------

    def __call__(self, index: int) -> FieldElement:
        return FieldElement(self, index)

    def from_int(self, n: int) -> FieldElement:
        """Image of the integer n under the ring map Z -> GF(p^m)."""
        r = n % self.p
        if self.base is None:
            return FieldElement(self, r)
        # prime-subfield elements sit at the indices of repeated 1+1+...
        idx = 0
        for _ in range(r):
            idx = self.add_idx(idx, 1)
        return FieldElement(self, idx)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self) -> Iterator[FieldElement]:
        """All elements in index order."""
        for i in range(self.order):
            yield FieldElement(self, i)

    def digits(self, index: int) -> tuple:
        """Base-field digit vector of an index, little-endian."""
        if self.base is None:
            return (index,)
        qb = self.base.order
        out = []
        for _ in range(self.rel_degree):
            out.append(index % qb)
            index //= qb
        return tuple(out)

    def encode(self, digits: Sequence[int]) -> int:
        if self.base is None:
            return int(digits[0])
        qb = self.base.order
        idx = 0
        for d in reversed(list(digits)):
            idx = idx * qb + int(d)
        return idx

    def prime_coeffs(self, index: int) -> list:
        """Flattened GF(p) coefficient vector of an index (length = degree)."""
        if self.base is None:
            return [index]
        out = []
        for d in self.digits(index):
            out.extend(self.base.prime_coeffs(d))
        return out

    def from_prime_coeffs(self, coeffs: Sequence[int]) -> FieldElement:
        coeffs = list(coeffs)
        if len(coeffs) != self.degree:
            raise PreconditionError(
                f"expected {self.degree} coefficients, got {len(coeffs)}"
            )
        if self.base is None:
            c = coeffs[0]
            if not 0 <= c < self.p:
                raise PreconditionError(f"coefficient {c} out of range for GF({self.p})")
            return FieldElement(self, c)
        step = self.base.degree
        digits = [
            self.base.from_prime_coeffs(coeffs[i * step : (i + 1) * step]).index
            for i in range(self.rel_degree)
        ]
        return FieldElement(self, self.encode(digits))

    # -- raw arithmetic on digit vectors (used to bootstrap the tables) --

    def _raw_add(self, a: int, b: int) -> int:
        if self.base is None:
            return (a + b) % self.p
        da, db = self.digits(a), self.digits(b)
        return self.encode([self.base.add_idx(x, y) for x, y in zip(da, db)])

    def _raw_mul(self, a: int, b: int) -> int:
        if self.base is None:
            return (a * b) % self.p
        B = self.base
        r = self.rel_degree
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * r - 1)
        for i, x in enumerate(da):
            if x == 0:
                continue
            for j, y in enumerate(db):
                prod[i + j] = B.add_idx(prod[i + j], B.mul_idx(x, y))
        # reduce modulo the monic modulus
        for deg in range(2 * r - 2, r - 1, -1):
            c = prod[deg]
            if c == 0:
                continue
            prod[deg] = 0
            for j in range(r):
                term = B.mul_idx(c, self.modulus[j])
                prod[deg - r + j] = B.sub_idx(prod[deg - r + j], term)
        return self.encode(prod[:r])

    # -- lookup tables -----------------------------------------------------

    def _build_tables(self) -> None:
        if self._tables_built:
            return
        q = self.order
        # smallest-index generator of the multiplicative group
        gen = None
        for cand in range(1, q):
            x, steps = cand, 1
            while x != 1:
                x = self._raw_mul(x, cand)
                steps += 1
            if steps == q - 1:
                gen = cand
                break
        assert gen is not None, "multiplicative group of a finite field is cyclic"
        exp = [1] * (q - 1)
        log = [0] * q
        x = 1
        for i in range(1, q - 1):
            x = self._raw_mul(x, gen)
            exp[i] = x
            log[x] = i
        self._exp, self._log, self._generator = exp, log, gen

        exp_arr = np.array(exp, dtype=np.int64)
        log_arr = np.array(log, dtype=np.int64)
        lega = log_arr[:, None] + log_arr[None, :]
        mul = exp_arr[lega % (q - 1)]
        mul[0, :] = 0
        mul[:, 0] = 0
        self._mul = mul.astype(np.int32)

        inv = np.zeros(q, dtype=np.int32)
        inv[1:] = exp_arr[(-log_arr[1:]) % (q - 1)]
        self._inv = inv

        if self.base is None:
            idx = np.arange(q, dtype=np.int64)
            add = (idx[:, None] + idx[None, :]) % self.p
            neg = (-idx) % self.p
        else:
            qb = self.base.order
            digits = np.empty((q, self.rel_degree), dtype=np.int64)
            tmp = np.arange(q, dtype=np.int64)
            for j in range(self.rel_degree):
                digits[:, j] = tmp % qb
                tmp //= qb
            btab = self.base.add_table.astype(np.int64)
            dsum = btab[digits[:, None, :], digits[None, :, :]]
            weights = qb ** np.arange(self.rel_degree, dtype=np.int64)
            add = dsum @ weights
            bneg = self.base.neg_table.astype(np.int64)
            neg = bneg[digits] @ weights
        self._add = add.astype(np.int32)
        self._neg = neg.astype(np.int32)
        for t in (self._mul, self._inv, self._add, self._neg):
            t.setflags(write=False)
        self._tables_built = True

    @property
    def add_table(self) -> np.ndarray:
        self._build_tables()
        return self._add

    @property
    def mul_table(self) -> np.ndarray:
        self._build_tables()
        return self._mul

    @property
    def neg_table(self) -> np.ndarray:
        self._build_tables()
        return self._neg

    @property
    def inv_table(self) -> np.ndarray:
        self._build_tables()
        return self._inv

    @property
    def primitive_element(self) -> FieldElement:
        """Smallest-index generator of the multiplicative group."""
        self._build_tables()
        return FieldElement(self, self._generator)

    # -- scalar index arithmetic ----------------------------------------

    def add_idx(self, a: int, b: int) -> int:
        if self._tables_built:
            return int(self._add[a, b])
        return self._raw_add(a, b)

    def sub_idx(self, a: int, b: int) -> int:
        return self.add_idx(a, self.neg_idx(b))

    def neg_idx(self, a: int) -> int:
        if self._tables_built:
            return int(self._neg[a])
        if self.base is None:
            return (-a) % self.p
        return self.encode([self.base.neg_idx(d) for d in self.digits(a)])

    def mul_idx(self, a: int, b: int) -> int:
        if self._tables_built:
            return int(self._mul[a, b])
        return self._raw_mul(a, b)

    def inv_idx(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative inverse")
        self._build_tables()
        return int(self._inv[a])

    def pow_idx(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("zero to a negative power")
            return 1 if e == 0 else 0
        self._build_tables()
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    # -- serialization ----------------------------------------------------

    def descriptor(self) -> dict:
        """JSON-ready field descriptor.

        ``{"p", "m", "modulus"}`` with the modulus low-degree-first; tower
        fields add a ``"base"`` descriptor, and their modulus entries are
        base-element indices.
        """
        if self.base is None:
            return {"p": self.p, "m": 1, "modulus": [0, 1]}
        d = {"p": self.p, "m": self.degree, "modulus": list(self.modulus)}
        if self.base.base is not None:
            d["base"] = self.base.descriptor()
        return d


def _poly_divmod(F: FiniteField, num: list, den: list) -> tuple:
    """Polynomial division over F on index-coefficient lists (low first)."""
    num = list(num)
    dden = len(den) - 1
    lead_inv = F.inv_idx(den[-1])
    quot = [0] * max(0, len(num) - dden)
    for shift in range(len(num) - dden - 1, -1, -1):
        c = F.mul_idx(num[shift + dden], lead_inv)
        if c == 0:
            continue
        quot[shift] = c
        for j, dj in enumerate(den):
            num[shift + j] = F.sub_idx(num[shift + j], F.mul_idx(c, dj))
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


def poly_eval(F: FiniteField, coeffs: Sequence[int], x: int) -> int:
    """Evaluate a polynomial (index coefficients, low first) at index x."""
    acc = 0
    for c in reversed(list(coeffs)):
        acc = F.add_idx(F.mul_idx(acc, x), c)
    return acc


def is_irreducible(F: FiniteField, coeffs: Sequence[int]) -> bool:
    """Trial-division irreducibility test for a monic polynomial over F.

    Divides by every monic polynomial of degree up to deg/2; exact and
    exhaustive at desk scale.
    """
    coeffs = list(coeffs)
    deg = len(coeffs) - 1
    if deg < 1 or coeffs[-1] != 1:
        raise PreconditionError("modulus must be monic of degree >= 1")
    if coeffs[0] == 0:
        return deg == 1
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(F.order), repeat=d):
            div = list(tail) + [1]
            _, rem = _poly_divmod(F, coeffs, div)
            if rem == [0]:
                return False
    return True


_FIELD_CACHE: dict = {}


def _smallest_irreducible(F: FiniteField, degree: int) -> tuple:
    """Lexicographically smallest monic irreducible, low-degree coefficients
    compared first."""
    for tail in itertools.product(range(F.order), repeat=degree):
        cand = list(tail) + [1]
        if is_irreducible(F, cand):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found; unreachable")


def extension_field(
    base: FiniteField, degree: int, modulus: Optional[Sequence[int]] = None
) -> FiniteField:
    """Extension of ``base`` by a monic irreducible modulus of given degree.

    Modulus coefficients are base-element indices, low degree first, with or
    without the trailing leading 1.  When omitted, the lexicographically
    smallest monic irreducible is chosen.
    """
    if degree < 2:
        raise PreconditionError("extension degree must be >= 2")
    if modulus is None:
        mod = _smallest_irreducible(base, degree)
    else:
        mod = [int(c) for c in modulus]
        if len(mod) == degree:
            mod = mod + [1]
        if len(mod) != degree + 1 or mod[-1] != 1:
            raise PreconditionError(
                f"modulus must be monic of degree {degree} (low-degree-first)"
            )
        if any(not 0 <= c < base.order for c in mod):
            raise PreconditionError("modulus coefficient out of range for the base field")
        if not is_irreducible(base, mod):
            raise ReducibleModulus(f"modulus {mod} is reducible over {base!r}")
        mod = tuple(mod)
    key = (base._key, mod)
    cached = _FIELD_CACHE.get(key)
    if cached is None:
        cached = FiniteField(base.p, base, mod)
        _FIELD_CACHE[key] = cached
    return cached


def make_field(p: int, m: int, modulus: Optional[Sequence[int]] = None) -> FiniteField:
    """Construct GF(p^m) over the prime field GF(p).

    With no modulus the lexicographically smallest monic irreducible of
    degree m is selected (coefficients compared low-degree-first), so field
    tables are reproducible.
    """
    if not _is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if m < 1:
        raise PreconditionError("extension degree must be >= 1")
    key = (p,)
    prime = _FIELD_CACHE.get(key)
    if prime is None:
        prime = FiniteField(p, None, (0, 1))
        _FIELD_CACHE[key] = prime
    if m == 1:
        if modulus is not None:
            mod = [int(c) for c in modulus]
            if mod not in ([0, 1], [0]):
                raise PreconditionError("GF(p) admits only the trivial modulus x")
        return prime
    return extension_field(prime, m, modulus)


def quadratic_extension(base: FiniteField) -> FiniteField:
    """The canonical GF(q^2) over ``base``, with the default modulus."""
    return extension_field(base, 2)


def field_from_descriptor(d: dict) -> FiniteField:
    if "base" in d:
        base = field_from_descriptor(d["base"])
        return extension_field(base, len(d["modulus"]) - 1, d["modulus"])
    p, m = int(d["p"]), int(d["m"])
    if m == 1:
        return make_field(p, 1)
    return make_field(p, m, d["modulus"])


# -- operations from the construction pipelines --------------------------


def frobenius(x: FieldElement, base_order: int) -> FieldElement:
    """x -> x**base_order, for x in a field of order base_order or its square."""
    F = x.field
    if base_order < 2 or (F.order != base_order and F.order != base_order**2):
        raise InvalidBaseOrder(
            f"base order {base_order} does not fit the tower of {F!r}"
        )
    return x**base_order


def is_square(x: FieldElement) -> bool:
    """Whether x has a square root in its own field.

    Uses the criterion x**((q-1)/2) == 1 for odd q; in characteristic 2
    squaring is a bijection, so every element is a square.
    """
    F = x.field
    if F.p == 2:
        return True
    if x.index == 0:
        return True
    return F.pow_idx(x.index, (F.order - 1) // 2) == 1


def sqrt_char2(x: FieldElement) -> FieldElement:
    """The unique square root in characteristic 2: x**(q/2)."""
    F = x.field
    if F.p != 2:
        raise OddCharacteristic("square roots are only unique in characteristic 2")
    return x ** (F.order // 2)


def norm_root(u: FieldElement) -> FieldElement:
    """Some v in GF(q^2)* with v**(q+1) == u, for u in the base subfield GF(q)*.

    Deterministic choice: with g the smallest-index generator of GF(q^2)*,
    u equals (g**(q+1))**t for a unique t in [0, q-2]; returns g**t.
    """
    E = u.field
    if E.base is None or E.rel_degree != 2:
        raise NotAnExtensionField(f"{E!r} is not a quadratic extension")
    if u.index == 0:
        raise ZeroInput("norm roots exist only for nonzero elements")
    q = E.base.order
    if u.index >= q:
        raise NotInBaseField(f"{u!r} is not in the base subfield GF({q})")
    E._build_tables()
    L = E._log[u.index]
    assert L % (q + 1) == 0, "base-subfield logs are multiples of q+1"
    t = L // (q + 1)
    return FieldElement(E, E._exp[t])


def embed(x: FieldElement, target: FiniteField) -> FieldElement:
    """Embed x into its registered quadratic-extension field.

    The tower layout stores base elements at identical indices, so the
    embedding preserves indices; it commutes with arithmetic and is fixed by
    the relative Frobenius.
    """
    if x.field == target:
        return x
    if target.base == x.field:
        return FieldElement(target, x.index)
    raise NoRegisteredEmbedding(f"no embedding of {x.field!r} into {target!r}")
