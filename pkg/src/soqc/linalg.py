"""Dense exact linear algebra over a finite field.

Matrices store element indices row-major.  Everything is deterministic:
Gauss-Jordan scans rows top-down for pivots, free columns are processed in
increasing index order, and reduced row echelon form is the canonical
representative of a row space.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import DimensionMismatch, RaggedRows, FieldMismatch
from .fields import FieldElement, FiniteField


def _row_indices(field: FiniteField, row) -> list:
    out = []
    for x in row:
        if isinstance(x, FieldElement):
            if x.field != field:
                raise FieldMismatch(f"entry from {x.field!r} in a {field!r} matrix")
            out.append(x.index)
        else:
            i = int(x)
            if not 0 <= i < field.order:
                raise FieldMismatch(f"index {i} out of range for {field!r}")
            out.append(i)
    return out


class MatrixF:
    """A dense matrix over one finite field, entries as element indices."""

    def __init__(self, field: FiniteField, rows: Sequence[Sequence]):
        self.field = field
        data = [_row_indices(field, r) for r in rows]
        widths = {len(r) for r in data}
        if len(widths) > 1:
            raise RaggedRows(f"row lengths differ: {sorted(widths)}")
        self.rows = len(data)
        self.cols = widths.pop() if widths else 0
        self.data = [list(r) for r in data]

    def __eq__(self, other):
        if isinstance(other, MatrixF):
            return self.field == other.field and self.data == other.data
        return NotImplemented

    def __repr__(self):
        return f"MatrixF({self.field!r}, {self.rows}x{self.cols})"

    def copy(self) -> "MatrixF":
        return MatrixF(self.field, self.data)

    def row(self, i: int) -> list:
        return list(self.data[i])

    def transpose(self) -> "MatrixF":
        return MatrixF(self.field, [[self.data[i][j] for i in range(self.rows)]
                                    for j in range(self.cols)])

    def __matmul__(self, other: "MatrixF") -> "MatrixF":
        if self.field != other.field:
            raise FieldMismatch("matrix product across distinct fields")
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.cols} columns vs {other.rows} rows")
        F = self.field
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = 0
                for k in range(self.cols):
                    acc = F.add_idx(acc, F.mul_idx(self.data[i][k], other.data[k][j]))
                row.append(acc)
            out.append(row)
        return MatrixF(F, out)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)


def rref(M: MatrixF) -> tuple:
    """Reduced row echelon form: (rref matrix, rank, pivot column list)."""
    F = M.field
    a = [list(r) for r in M.data]
    rows, cols = M.rows, M.cols
    pivots = []
    pr = 0
    for pc in range(cols):
        src = next((r for r in range(pr, rows) if a[r][pc] != 0), None)
        if src is None:
            continue
        a[pr], a[src] = a[src], a[pr]
        inv = F.inv_idx(a[pr][pc])
        a[pr] = [F.mul_idx(inv, x) for x in a[pr]]
        for r in range(rows):
            if r != pr and a[r][pc] != 0:
                c = a[r][pc]
                a[r] = [F.sub_idx(x, F.mul_idx(c, y)) for x, y in zip(a[r], a[pr])]
        pivots.append(pc)
        pr += 1
        if pr == rows:
            break
    return MatrixF(F, a), len(pivots), pivots


def kernel_basis(M: MatrixF) -> list:
    """Basis of the right null space {x : Mx = 0}, as rows in RREF.

    Free columns are processed in increasing index order; the stacked basis
    vectors are then canonicalized to reduced echelon form, so the output is
    deterministic and leading entries are 1.
    """
    F = M.field
    R, rank, pivots = rref(M)
    free = [c for c in range(M.cols) if c not in pivots]
    vecs = []
    for fc in free:
        v = [0] * M.cols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = F.neg_idx(R.data[r][fc])
        vecs.append(v)
    if not vecs:
        return []
    canon, _, _ = rref(MatrixF(F, vecs))
    return [list(r) for r in canon.data]


def rref_rank_solve(
    M: MatrixF, rhs: Optional[Sequence] = None
) -> tuple:
    """Gauss-Jordan reduction: (rref, rank, particular solution or None).

    The solution sets free variables to zero; None when the system is
    inconsistent.  With no rhs the solution slot is None.
    """
    F = M.field
    if rhs is None:
        R, rank, _ = rref(M)
        return R, rank, None
    b = _row_indices(F, rhs)
    if len(b) != M.rows:
        raise DimensionMismatch(f"rhs length {len(b)} != {M.rows} rows")
    aug = MatrixF(F, [r + [x] for r, x in zip(M.data, b)])
    Raug, rank_aug, pivots_aug = rref(aug)
    R, rank, pivots = rref(M)
    if M.cols in pivots_aug:
        return R, rank, None
    sol = [0] * M.cols
    for r, pc in enumerate(pivots_aug):
        sol[pc] = Raug.data[r][M.cols]
    return R, rank, sol
