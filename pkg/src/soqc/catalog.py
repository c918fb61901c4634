"""Persistent catalog of constructed codes, JSON-lines on disk.

Each record holds a constructed self-orthogonal code, the twist that
produced it, exhaustive verification results, and the derived quantum
parameters.  Records are canonical JSON (sorted keys, no whitespace), so a
record's identity is a stable content hash and repeated runs are
byte-identical.  The catalog file is append-only with advisory whole-file
locking.
"""

from __future__ import annotations

import fcntl
import hashlib
import json
import os
from typing import Optional

from . import __version__
from .codes import LinearCode, TwistVector, code_from_dict
from .elliptic import curve, elliptic_code, so_elliptic
from .errors import (
    BudgetExceeded,
    PreconditionError,
    SearchExhausted,
)
from .fields import FiniteField, field_from_descriptor, make_field
from .grs import dual_twist_vector, euclidean_so_grs, grs_code, hermitian_so_grs, make_grs_spec
from .quantum import (
    QuantumParams,
    full_weight_count_bound,
    full_weight_threshold,
    quantum_from_euclidean,
    quantum_from_hermitian,
)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def field_of_order(q: int) -> FiniteField:
    """GF(q) for a prime power q, with the default modulus."""
    if q < 2:
        raise PreconditionError(f"{q} is not a prime power")
    p = 2
    while p * p <= q and q % p != 0:
        p += 1
    if q % p != 0:
        p = q
    n, e = q, 0
    while n % p == 0:
        n //= p
        e += 1
    if n != 1:
        raise PreconditionError(f"{q} is not a prime power")
    return make_field(p, e)


def _twist_to_json(v: TwistVector) -> list:
    F = v.field
    return [F.prime_coeffs(x) for x in v.entries]


def _twist_from_json(field: FiniteField, data: list) -> TwistVector:
    return TwistVector(field, [field.from_prime_coeffs(c) for c in data])


def _code_payload(code: LinearCode) -> dict:
    d = code.to_dict()
    del d["field"]
    return d


def record_id(field_desc: dict, code_payload: dict, twist_json: list, inner: str) -> str:
    content = canonical_json(
        {"field": field_desc, "code": code_payload, "twist": twist_json, "inner": inner}
    )
    return hashlib.sha256(content.encode("utf-8")).hexdigest()


def _base_restriction(code: LinearCode, twist: TwistVector) -> LinearCode:
    """Undo the twist and restrict scalars: the base-field code whose lift
    was twisted.  Valid because untwisting returns a code whose RREF
    generator has all entries in the base subfield."""
    base = code.field.base
    untwisted = code.twist(twist.inverse())
    assert all(x < base.order for row in untwisted.generator for x in row)
    return LinearCode(base, list(untwisted.generator), n=code.n)


def _hermitian_distances(code: LinearCode, twist: TwistVector, budget: Optional[int]) -> tuple:
    """(min distance, Hermitian dual distance) of a twisted lifted code,
    computed over the base field.

    Twisting and conjugation preserve weights, and extending scalars
    preserves minimum distance, so both distances equal their Euclidean
    counterparts for the untwisted base-field code.
    """
    B = _base_restriction(code, twist)
    try:
        d = B.min_distance(budget)
    except BudgetExceeded:
        d = None
    try:
        dd = B.dual_euclidean().min_distance(budget)
    except BudgetExceeded:
        dd = None
    return d, dd


def _euclidean_distances(code: LinearCode, budget: Optional[int]) -> tuple:
    try:
        d = code.min_distance(budget)
    except BudgetExceeded:
        d = None
    try:
        dd = code.dual_euclidean().min_distance(budget)
    except BudgetExceeded:
        dd = None
    return d, dd


def _assemble_record(
    source: str,
    parameters: dict,
    inner: str,
    code: LinearCode,
    twist: TwistVector,
    verification: dict,
    quantum: QuantumParams,
) -> dict:
    field_desc = code.field.descriptor()
    payload = _code_payload(code)
    twist_json = _twist_to_json(twist)
    return {
        "id": record_id(field_desc, payload, twist_json, inner),
        "field": field_desc,
        "code": payload,
        "twist": twist_json,
        "inner": inner,
        "verification": verification,
        "quantum": quantum.to_dict(),
        "construction": {
            "source": source,
            "parameters": parameters,
            "tool_version": __version__,
        },
    }


def construct_grs_record(
    q: int, n: Optional[int], k: int, inner: str, budget: Optional[int] = None
) -> dict:
    """Run a GRS self-orthogonalization pipeline and assemble its record.

    The code and its dual are both MDS, so the record carries the claimed
    distances n-k+1 and k+1; enumeration re-verifies them when the budget
    allows, otherwise the enumerated slots stay null.
    """
    field = field_of_order(q)
    if n is None:
        n = q
    if not 1 <= n <= q:
        raise PreconditionError(f"need 1 <= n <= q, got n={n}")
    points = list(range(n))
    if inner == "euclidean":
        twist, code = euclidean_so_grs(field, points, k)
        d, dd = _euclidean_distances(code, budget)
        quantum = quantum_from_euclidean(code, k + 1, budget)
    elif inner == "hermitian":
        twist, code = hermitian_so_grs(field, points, k)
        d, dd = _hermitian_distances(code, twist, budget)
        quantum = quantum_from_hermitian(code, k + 1, budget)
    else:
        raise PreconditionError(f"unknown inner-product mode {inner!r}")
    assert d is None or d == n - k + 1
    assert dd is None or dd == k + 1
    verification = {
        "self_orthogonal": True,
        "min_distance": d,
        "dual_distance": dd,
    }
    parameters = {
        "q": q,
        "n": n,
        "k": k,
        "claimed_distance": n - k + 1,
        "claimed_dual_distance": k + 1,
    }
    return _assemble_record("grs", parameters, inner, code, twist, verification, quantum)


def construct_elliptic_record(
    q: int, coeffs: list, m: int, inner: str, budget: Optional[int] = None
) -> dict:
    """Run the elliptic self-orthogonalization search and assemble a record.

    Raises SearchExhausted when no full-weight dual codeword exists.  The
    quantum distance comes from the enumerated dual distance; if that
    enumeration exceeds the budget the construction fails rather than guess.
    """
    field = field_of_order(q)
    E = curve(field, *coeffs)
    S = E.affine_points()
    result = so_elliptic(E, S, m, inner, budget)
    if result is None:
        raise SearchExhausted(
            f"no full-weight codeword in the product-code dual for m={m}"
        )
    twist, code = result
    if inner == "euclidean":
        d, dd = _euclidean_distances(code, budget)
        if dd is None:
            raise BudgetExceeded("dual distance enumeration exceeds the budget")
        quantum = quantum_from_euclidean(code, dd, budget)
    else:
        d, dd = _hermitian_distances(code, twist, budget)
        if dd is None:
            raise BudgetExceeded("dual distance enumeration exceeds the budget")
        quantum = quantum_from_hermitian(code, dd, budget)
    verification = {
        "self_orthogonal": True,
        "min_distance": d,
        "dual_distance": dd,
    }
    parameters = {"q": q, "curve": [int(c) for c in coeffs], "m": m, "n": len(S)}
    return _assemble_record(
        "elliptic", parameters, inner, code, twist, verification, quantum
    )


def verify_record(record: dict, budget: Optional[int] = None) -> dict:
    """Recompute a record's verifiable claims.

    Returns a report with one entry per check: "ok", "mismatch", or
    "budget".  The overall status is "ok" only if every check passed;
    "mismatch" wins over "budget".
    """
    checks: dict = {}
    field = field_from_descriptor(record["field"])
    code = code_from_dict({"field": record["field"], **record["code"]})
    twist = _twist_from_json(field, record["twist"])
    inner = record["inner"]

    recomputed_id = record_id(
        record["field"], _code_payload(code), _twist_to_json(twist), inner
    )
    checks["id"] = "ok" if recomputed_id == record["id"] else "mismatch"

    so = code.is_self_orthogonal(inner)
    checks["self_orthogonal"] = (
        "ok" if so == record["verification"]["self_orthogonal"] else "mismatch"
    )

    if inner == "hermitian":
        d, dd = _hermitian_distances(code, twist, budget)
    else:
        d, dd = _euclidean_distances(code, budget)
    for name, fresh in (("min_distance", d), ("dual_distance", dd)):
        stored = record["verification"][name]
        if fresh is None:
            checks[name] = "budget"
        elif stored is None:
            checks[name] = "ok"
        else:
            checks[name] = "ok" if fresh == stored else "mismatch"

    d_quantum = record["verification"]["dual_distance"]
    if d_quantum is None:
        d_quantum = record["construction"]["parameters"].get("claimed_dual_distance")
    if d_quantum is None or not so:
        checks["quantum"] = "mismatch"
    else:
        make = quantum_from_hermitian if inner == "hermitian" else quantum_from_euclidean
        try:
            fresh_q = make(code, d_quantum, budget).to_dict()
            checks["quantum"] = "ok" if fresh_q == record["quantum"] else "mismatch"
        except BudgetExceeded:
            checks["quantum"] = "budget"

    if any(v == "mismatch" for v in checks.values()):
        status = "mismatch"
    elif any(v == "budget" for v in checks.values()):
        status = "budget"
    else:
        status = "ok"
    return {"id": record["id"], "status": status, "checks": checks}


# -- census and bound tables -------------------------------------------------


def census_rows(q: int, n_max: int, m_max: int, budget: Optional[int] = None) -> list:
    """Exact full-weight counts in duals of odd-degree GRS codes, against the
    counting bound and both threshold variants.

    Rows cover 2 <= n <= min(n_max, q) and 0 <= m <= min(m_max, (n-2)/2),
    evaluation points being the first n field elements.  On every row the
    derived-threshold prediction must be confirmed by the exact count.
    """
    field = field_of_order(q)
    rows = []
    for n in range(2, min(n_max, q) + 1):
        points = list(range(n))
        for m in range(0, min(m_max, (n - 2) // 2) + 1):
            code = grs_code(make_grs_spec(field, points, 2 * m + 1))
            count = code.dual_euclidean().count_full_weight(budget)
            bound = full_weight_count_bound(q, n, m, 0)
            t_stated = full_weight_threshold(q, n, 0, "stated")
            t_derived = full_weight_threshold(q, n, 0, "derived")
            predicted = m < t_derived
            actual = count > 0
            assert count >= max(0.0, bound), "exact count fell below its lower bound"
            assert not predicted or actual, "threshold predicted a count the census refutes"
            rows.append(
                {
                    "q": q,
                    "n": n,
                    "m": m,
                    "full_weight_count": count,
                    "lower_bound": bound,
                    "threshold_stated": t_stated,
                    "threshold_derived": t_derived,
                    "predicted_positive": predicted,
                    "actually_positive": actual,
                }
            )
    return rows


def bounds_rows(q: int, delta_min: float, delta_max: float, steps: int) -> list:
    """Rate-curve samples on an evenly spaced grid of relative distances."""
    from .quantum import ag_rate, gv_rate
    from .errors import NotASquare

    if steps < 1:
        raise PreconditionError("need at least one grid point")
    if not 0.0 < delta_min <= delta_max < 0.5:
        raise PreconditionError("grid must lie inside (0, 1/2)")
    try:
        ag_ok = bool(ag_rate(q, delta_min)) or True
    except NotASquare:
        ag_ok = False
    rows = []
    for i in range(steps):
        if steps == 1:
            delta = delta_min
        else:
            delta = delta_min + (delta_max - delta_min) * i / (steps - 1)
        rows.append(
            {
                "delta": delta,
                "gv_rate": gv_rate(q, delta),
                "ag_rate": ag_rate(q, delta) if ag_ok else None,
            }
        )
    return rows


# -- file IO -------------------------------------------------------------------


def append_record(path: str, record: dict) -> None:
    line = canonical_json(record) + "\n"
    with open(path, "a", encoding="utf-8") as fh:
        fcntl.flock(fh.fileno(), fcntl.LOCK_EX)
        try:
            fh.write(line)
            fh.flush()
            os.fsync(fh.fileno())
        finally:
            fcntl.flock(fh.fileno(), fcntl.LOCK_UN)


def load_records(path: str) -> list:
    if not os.path.exists(path):
        return []
    records = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                records.append(json.loads(line))
    return records


def find_record(path: str, id_prefix: str) -> dict:
    matches = [r for r in load_records(path) if r["id"].startswith(id_prefix)]
    if not matches:
        raise KeyError(f"no catalog record with id {id_prefix!r}")
    if len({r["id"] for r in matches}) > 1:
        raise KeyError(f"id prefix {id_prefix!r} is ambiguous")
    return matches[-1]
