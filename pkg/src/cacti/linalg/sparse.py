"""Exact sparse matrices and row reduction over any :class:`FieldSpec`."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

import numpy as np

from ..scalar import FieldSpec
from . import dense_rref_modp

DENSE_COLUMN_LIMIT = 2000


class SparseMatrix:
    """``rows x cols`` matrix with entries ``{(row, col): raw scalar}`` and no stored zeros."""

    def __init__(self, field: FieldSpec, rows: int, cols: int, entries: Mapping | None = None):
        self.field = field
        self.rows, self.cols = rows, cols
        self.entries: dict = {}
        for (r, c), x in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry ({r}, {c}) outside a {rows}x{cols} matrix")
            x = field.norm(field.coerce(x))
            if x != 0:
                self.entries[(r, c)] = x

    @classmethod
    def from_columns(cls, field: FieldSpec, rows: int, columns: Sequence[Mapping]) -> "SparseMatrix":
        m = cls(field, rows, len(columns))
        for c, col in enumerate(columns):
            for r, x in col.items():
                x = field.norm(x)
                if x != 0:
                    m.entries[(r, c)] = x
        return m

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row_dicts(self) -> list[dict]:
        out: list[dict] = [dict() for _ in range(self.rows)]
        for (r, c), x in self.entries.items():
            out[r][c] = x
        return out

    def column_dicts(self) -> list[dict]:
        out: list[dict] = [dict() for _ in range(self.cols)]
        for (r, c), x in self.entries.items():
            out[c][r] = x
        return out

    def to_dense(self) -> np.ndarray:
        a = self.field.zeros((self.rows, self.cols))
        for (r, c), x in self.entries.items():
            a[r, c] = x
        return a

    def transpose(self) -> "SparseMatrix":
        m = SparseMatrix(self.field, self.cols, self.rows)
        m.entries = {(c, r): x for (r, c), x in self.entries.items()}
        return m

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        F = self.field
        by_row: dict = {}
        for (k, c), x in other.entries.items():
            by_row.setdefault(k, []).append((c, x))
        out: dict = {}
        for (r, k), x in self.entries.items():
            for c, y in by_row.get(k, ()):
                out[(r, c)] = out.get((r, c), 0) + x * y
        m = SparseMatrix(F, self.rows, other.cols)
        m.entries = {k: F.norm(v) for k, v in out.items() if F.norm(v) != 0}
        return m

    def apply(self, vec: Mapping) -> dict:
        F = self.field
        out: dict = {}
        for (r, c), x in self.entries.items():
            v = vec.get(c)
            if v:
                out[r] = out.get(r, 0) + x * v
        return {r: F.norm(v) for r, v in out.items() if F.norm(v) != 0}

    def is_zero(self) -> bool:
        return not self.entries

    def triplets(self) -> str:
        """Coordinate text: one ``row col scalar`` line per entry."""
        F = self.field
        lines = [f"{r} {c} {F.fmt(x)}" for (r, c), x in sorted(self.entries.items())]
        return "\n".join([f"% {self.rows} {self.cols} {len(lines)}"] + lines)

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={len(self.entries)}, {self.field})"


# ---------------------------------------------------------------------------
# row reduction
# ---------------------------------------------------------------------------

class Echelon:
    """Reduced row echelon basis of a row space: ``rows[c]`` has pivot column c (coefficient 1)."""

    def __init__(self, field: FieldSpec):
        self.field = field
        self.rows: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def reduce(self, vec: Mapping) -> dict:
        """Remainder of ``vec`` modulo the row space (canonical: no pivot-column entries)."""
        F = self.field
        r = {k: v for k, v in vec.items() if v != 0}
        for c in [c for c in r if c in self.rows]:
            f = r.get(c, 0)
            if f == 0:
                continue
            for k, x in self.rows[c].items():
                v = F.norm(r.get(k, 0) - f * x)
                if v == 0:
                    r.pop(k, None)
                else:
                    r[k] = v
        return r

    def add(self, vec: Mapping) -> int | None:
        """Insert a vector; returns its new pivot column, or None if it was dependent."""
        F = self.field
        r = self.reduce(vec)
        if not r:
            return None
        c0 = min(r)
        inv = F.inv(r[c0])
        r = {k: F.norm(v * inv) for k, v in r.items()}
        for row in self.rows.values():
            f = row.get(c0)
            if f:
                for k, x in r.items():
                    v = F.norm(row.get(k, 0) - f * x)
                    if v == 0:
                        row.pop(k, None)
                    else:
                        row[k] = v
        self.rows[c0] = r
        return c0

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)


def _dense_echelon(field: FieldSpec, rows: list[dict], ncols: int) -> Echelon:
    a = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, row in enumerate(rows):
        for c, x in row.items():
            a[i, c] = x
    m, pivots = dense_rref_modp(a, field.p)
    e = Echelon(field)
    for i, c in enumerate(pivots):
        nz = np.flatnonzero(m[i])
        e.rows[c] = {int(k): int(m[i, k]) for k in nz}
    return e


def echelon(field: FieldSpec, rows: Iterable[Mapping], ncols: int) -> Echelon:
    """Reduced echelon form of the span of ``rows``."""
    rows = [dict(r) for r in rows]
    if field.is_prime and field.small_prime and 0 < ncols <= DENSE_COLUMN_LIMIT and rows:
        return _dense_echelon(field, rows, ncols)
    e = Echelon(field)
    for r in rows:
        e.add(r)
    return e


def rank(M: SparseMatrix) -> int:
    return echelon(M.field, M.row_dicts(), M.cols).rank


def kernel_from_echelon(e: Echelon, ncols: int) -> list[dict]:
    F = e.field
    piv = set(e.rows)
    basis = []
    for f in range(ncols):
        if f in piv:
            continue
        v = {f: 1}
        for c, row in e.rows.items():
            x = row.get(f)
            if x:
                v[c] = F.norm(-x)
        basis.append(v)
    return basis


def rank_kernel(M: SparseMatrix) -> tuple[int, list[dict]]:
    """Rank and the reduced kernel basis (one vector per non-pivot column)."""
    e = echelon(M.field, M.row_dicts(), M.cols)
    return e.rank, kernel_from_echelon(e, M.cols)


def solve(M: SparseMatrix, b: Mapping) -> dict | None:
    """Some x with M x = b (free variables zero), or None."""
    F = M.field
    rows = M.row_dicts()
    aug = [dict(r) for r in rows]
    for r, x in b.items():
        if x:
            aug[r][M.cols] = x
    e = echelon(F, aug, M.cols + 1)
    if M.cols in e.rows:
        return None
    x: dict = {}
    for c, row in e.rows.items():
        v = row.get(M.cols, 0)
        if v:
            x[c] = v
    return x
