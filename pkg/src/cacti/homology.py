"""Cohomology of the cobar and Hochschild complexes by exact rank computations.

A complex is presented degree by degree: each degree has a canonical basis
and the differential maps degree n to degree n + 1.  Without internal
differentials the degree is the external degree at a fixed internal degree;
with one, components are grouped by total degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

import numpy as np

from .algebra import AlgebraPresentation, BialgebraPresentation, CounitKernel, counit_kernel
from .cobar import CobarElement, basis_words, d_word, differential, word_total
from .errors import NotACocycle, ParentMismatch, TruncationExceeded, UnsupportedGrading
from .hochschild import Cochain, HochschildComplex, _demote, hdifferential, hgbracket, hochschild
from .linalg import Echelon, SparseMatrix, echelon

COMPONENT_CAP = 200_000


class CobarComplex:
    """Omega(H) degree by degree.

    Degree n is the span of words of length n and internal degree ``internal``
    when H has no differential, and of all words of total degree n otherwise.
    """

    def __init__(self, K: CounitKernel | BialgebraPresentation, internal: int = 0, cap: int = COMPONENT_CAP):
        self.K = K if isinstance(K, CounitKernel) else counit_kernel(K)
        self.field = self.K.field
        self.internal = internal
        self.cap = cap
        self.by_total = self.K.parent.has_differential
        if self.by_total and any(d < 0 for d in self.K.degrees):
            raise UnsupportedGrading("total-degree components are infinite when letters have negative degree")
        self._bases: dict = {}
        self.name = f"Omega({self.K.parent.name})"

    def describe(self, n: int) -> str:
        return f"total {n}" if self.by_total else f"({self.internal},{n})"

    def size(self, n: int) -> int:
        return len(self.basis(n))

    def basis(self, n: int) -> list:
        got = self._bases.get(n)
        if got is not None:
            return got
        K = self.K
        exts = range(0, n + 1) if self.by_total else [n]
        got = []
        for ext in exts:
            if ext < 0:
                continue
            if K.dim ** ext > self.cap:
                raise TruncationExceeded(f"{self.name}: words of length {ext} exceed the cap {self.cap}")
            if self.by_total:
                got.extend(w for w in basis_words(K, ext) if word_total(K, w) == n)
            else:
                got.extend(basis_words(K, ext, self.internal))
        self._bases[n] = got
        self._bases[("index", n)] = {w: i for i, w in enumerate(got)}
        return got

    def index(self, n: int) -> dict:
        self.basis(n)
        return self._bases[("index", n)]

    def d_column(self, n: int, i: int) -> dict:
        w = self.basis(n)[i]
        idx = self.index(n + 1)
        return {idx[r]: c for r, c in d_word(self.K, w).items()}

    def degree_of(self, x: CobarElement) -> int:
        b = x.bidegree()
        if b is None:
            raise ValueError("zero element has no degree")
        return b.total if self.by_total else b.external

    def to_vector(self, x: CobarElement, n: int) -> dict:
        if x.parent is not self.K:
            raise ParentMismatch("element of a different cobar construction")
        idx = self.index(n)
        try:
            return {idx[w]: c for w, c in x.terms.items()}
        except KeyError:
            raise ValueError(f"element is not in degree {self.describe(n)}") from None

    def from_vector(self, n: int, vec: Mapping) -> CobarElement:
        basis = self.basis(n)
        return CobarElement._raw(self.K, {basis[i]: c for i, c in vec.items() if c != 0})

    def d(self, x: CobarElement) -> CobarElement:
        return differential(x)

    def bracket(self, a, b):
        from .cacti_ops import gbracket
        return gbracket(a, b)


class HochschildCochains:
    """C*(A) degree by degree: arity q at internal degree p, or total degree
    p + q (with q <= ``max_q``) when A has a differential."""

    def __init__(self, A: AlgebraPresentation | HochschildComplex, internal: int = 0, max_q: int = 6,
                 cap: int = COMPONENT_CAP):
        self.C = A if isinstance(A, HochschildComplex) else hochschild(A)
        self.A = self.C.A
        self.field = self.C.field
        self.internal = internal
        self.max_q = max_q
        self.cap = cap
        self.by_total = self.A.has_differential
        self._bases: dict = {}
        self.name = f"C*({self.A.name})"

    def describe(self, n: int) -> str:
        return f"total {n}" if self.by_total else f"({self.internal},{n})"

    def _pieces(self, n: int) -> list[tuple[int, int]]:
        if self.by_total:
            return [(n - q, q) for q in range(0, self.max_q + 1)
                    if (n - q) in self.C.internal_degrees(q)]
        return [(self.internal, n)] if n >= 0 else []

    def basis(self, n: int) -> list:
        got = self._bases.get(n)
        if got is not None:
            return got
        got = []
        for p, q in self._pieces(n):
            if self.C.dim ** (q + 1) > self.cap:
                raise TruncationExceeded(f"{self.name}: arity {q} exceeds the cap {self.cap}")
            for idx in zip(*np.nonzero(self.C.mask(p, q))):
                got.append((p, q) + tuple(int(i) for i in idx))
        self._bases[n] = got
        self._bases[("index", n)] = {b: i for i, b in enumerate(got)}
        return got

    def size(self, n: int) -> int:
        return len(self.basis(n))

    def index(self, n: int) -> dict:
        self.basis(n)
        return self._bases[("index", n)]

    def truncated(self, n: int) -> bool:
        """True when degree n of the total complex is cut off by ``max_q``."""
        if not self.by_total:
            return False
        return any(q == self.max_q for _, q in self._pieces(n + 1))

    def basis_element(self, key: tuple) -> Cochain:
        p, q, idx = key[0], key[1], key[2:]
        t = self.field.zeros((self.C.dim,) * (q + 1))
        t[idx] = 1
        return Cochain(self.C, {(p, q): t})

    def d_column(self, n: int, i: int) -> dict:
        key = self.basis(n)[i]
        return self.to_vector(hdifferential(self.basis_element(key)), n + 1, strict=False)

    def degree_of(self, f: Cochain) -> int:
        b = f.bidegree()
        if b is None:
            raise ValueError("zero cochain has no degree")
        return b[0] + b[1] if self.by_total else b[1]

    def to_vector(self, f: Cochain, n: int, strict: bool = True) -> dict:
        if f.parent is not self.C:
            raise ParentMismatch("cochain of a different algebra")
        idx = self.index(n)
        F = self.field
        out: dict = {}
        for (p, q), entry, x in f.entries():
            key = (p, q) + entry
            i = idx.get(key)
            if i is None:
                if strict or q <= self.max_q:
                    raise ValueError(f"cochain is not in degree {self.describe(n)}")
                continue
            out[i] = F.norm(out.get(i, 0) + x)
        return {i: x for i, x in out.items() if x != 0}

    def from_vector(self, n: int, vec: Mapping) -> Cochain:
        basis = self.basis(n)
        F = self.field
        parts: dict = {}
        for i, c in vec.items():
            if c == 0:
                continue
            p, q, idx = basis[i][0], basis[i][1], basis[i][2:]
            t = parts.get((p, q))
            if t is None:
                t = parts[(p, q)] = np.zeros((self.C.dim,) * (q + 1), dtype=object)
            t[idx] = F.norm(c)
        return Cochain(self.C, {k: _demote(F, t) for k, t in parts.items()})

    def d(self, f: Cochain) -> Cochain:
        return hdifferential(f)

    def bracket(self, a, b):
        return hgbracket(a, b)


def as_complex(obj, internal: int = 0, max_q: int = 6):
    """Wrap a bialgebra or cobar kernel as Omega(H), an algebra as C*(A)."""
    if isinstance(obj, (CobarComplex, HochschildCochains)):
        return obj
    if isinstance(obj, (CounitKernel, BialgebraPresentation)):
        return CobarComplex(obj, internal)
    if isinstance(obj, (AlgebraPresentation, HochschildComplex)):
        return HochschildCochains(obj, internal, max_q)
    raise TypeError(f"no cochain complex for {type(obj).__name__}")


def differential_matrix(cx, n: int) -> SparseMatrix:
    """Matrix of d from degree n to degree n + 1 in the canonical bases."""
    cx = as_complex(cx)
    rows, cols = cx.size(n + 1), cx.size(n)
    m = SparseMatrix(cx.field, rows, cols)
    for i in range(cols):
        for r, c in cx.d_column(n, i).items():
            m.entries[(r, i)] = c
    return m


@dataclass
class _Reduced:
    """Row reduction of [d(e_i) | e_i] for the basis e_i of one degree."""

    targets: int
    rank: int
    kernel: list
    image: Echelon


def _reduced(cx, n: int) -> _Reduced:
    cache = cx.__dict__.setdefault("_reduced", {})
    got = cache.get(n)
    if got is not None:
        return got
    T, S = cx.size(n + 1), cx.size(n)
    rows = []
    for i in range(S):
        row = dict(cx.d_column(n, i))
        row[T + i] = 1
        rows.append(row)
    e = echelon(cx.field, rows, T + S)
    image = Echelon(cx.field)
    kernel = []
    for c in e.pivots:
        row = e.rows[c]
        if c < T:
            image.rows[c] = {k: x for k, x in row.items() if k < T}
        else:
            kernel.append({k - T: x for k, x in row.items()})
    got = _Reduced(T, image.rank, kernel, image)
    cache[n] = got
    got.augmented = e
    return got


@dataclass
class BettiEntry:
    degree: int
    label: str
    dim: int
    rank_in: int
    rank_out: int | None
    betti: int
    note: str = ""


@dataclass
class BettiTable:
    """Betti numbers of a complex over a window of degrees."""

    complex_id: str
    field: Any
    entries: list = field(default_factory=list)

    def __getitem__(self, n: int) -> BettiEntry:
        for e in self.entries:
            if e.degree == n:
                return e
        raise KeyError(n)

    @property
    def betti(self) -> list[int]:
        return [e.betti for e in self.entries]

    def to_text(self) -> str:
        head = ("degree", "bidegree", "dim", "rank_in", "rank_out", "betti")
        rows = [head]
        for e in self.entries:
            rows.append((str(e.degree), e.label, str(e.dim), str(e.rank_in),
                         "-" if e.rank_out is None else str(e.rank_out), str(e.betti)))
        widths = [max(len(r[i]) for r in rows) for i in range(len(head))]
        lines = [f"# cohomology of {self.complex_id} over {self.field}"]
        for r, e in zip(rows, [None] + self.entries):
            line = "  ".join(x.rjust(w) for x, w in zip(r, widths))
            if e is not None and e.note:
                line += f"  ({e.note})"
            lines.append(line.rstrip())
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"complex": self.complex_id, "field": str(self.field),
                "entries": [{"degree": e.degree, "bidegree": e.label, "dim": e.dim, "rank_in": e.rank_in,
                             "rank_out": e.rank_out, "betti": e.betti, "note": e.note}
                            for e in self.entries]}


def betti(cx, window: tuple[int, int] = (0, 4)) -> BettiTable:
    """Betti numbers for degrees lo..hi (inclusive).

    When the outgoing matrix of the top degrees exceeds the component cap,
    dim - rank_in is reported; it is only an upper bound.
    """
    cx = as_complex(cx)
    lo, hi = window
    table = BettiTable(cx.name, cx.field)
    for n in range(lo, hi + 1):
        dim = cx.size(n)
        rank_in = _reduced(cx, n - 1).rank if cx.size(n - 1) else 0
        note = ""
        try:
            rank_out = _reduced(cx, n).rank
        except TruncationExceeded:
            rank_out = None
            note = "upper bound: outgoing matrix over the cap"
        if getattr(cx, "truncated", lambda _: False)(n):
            note = f"truncated at arity {cx.max_q}"
        b = dim - rank_in - (rank_out or 0)
        table.entries.append(BettiEntry(n, cx.describe(n), dim, rank_in, rank_out, b, note))
    return table


@dataclass
class CohomologyClass:
    """A cocycle standing for its class; ``witness`` is a preimage when the class is zero."""

    complex: Any
    degree: int
    representative: Any
    is_zero: bool | None = None
    witness: Any = None

    def __repr__(self):
        return f"CohomologyClass({self.complex.describe(self.degree)}: {self.representative.to_text()})"


def representatives(cx, n: int) -> list[CohomologyClass]:
    """Canonical cocycles whose classes form a basis of H^n."""
    cx = as_complex(cx)
    ker = _reduced(cx, n).kernel
    image = _reduced(cx, n - 1).image if cx.size(n - 1) else Echelon(cx.field)
    reps = echelon(cx.field, [image.reduce(v) for v in ker], cx.size(n)) if ker else Echelon(cx.field)
    out = []
    for c in reps.pivots:
        vec = image.reduce(reps.rows[c])
        out.append(CohomologyClass(cx, n, cx.from_vector(n, vec), False))
    return out


def is_coboundary(cx, z) -> tuple[bool, Any]:
    """(True, w) with d w = z, or (False, None).  Raises NotACocycle if d z != 0."""
    cx = as_complex(cx)
    if z.is_zero():
        return True, z
    if not cx.d(z).is_zero():
        raise NotACocycle("d z != 0")
    n = cx.degree_of(z)
    if cx.size(n - 1) == 0:
        return False, None
    red = _reduced(cx, n - 1)
    rem = red.augmented.reduce(cx.to_vector(z, n))
    if any(k < red.targets for k in rem):
        return False, None
    F = cx.field
    w = {k - red.targets: F.norm(-x) for k, x in rem.items()}
    return True, cx.from_vector(n - 1, w)


def image_rank(cx, n: int, cocycles) -> int:
    """Dimension of the span of the classes of the given degree-n cocycles."""
    cx = as_complex(cx)
    image = _reduced(cx, n - 1).image if cx.size(n - 1) else Echelon(cx.field)
    vecs = [image.reduce(cx.to_vector(z, n)) for z in cocycles if not z.is_zero()]
    return echelon(cx.field, vecs, cx.size(n)).rank if vecs else 0


def cohomology_class(cx, z) -> CohomologyClass:
    cx = as_complex(cx)
    zero, w = is_coboundary(cx, z)
    n = cx.degree_of(z) if not z.is_zero() else 0
    return CohomologyClass(cx, n, z, zero, w if zero else None)


def same_class(c1: CohomologyClass, c2: CohomologyClass) -> bool:
    if c1.complex is not c2.complex:
        raise ParentMismatch("classes in different complexes")
    return is_coboundary(c1.complex, c1.representative - c2.representative)[0]


def class_bracket(c1: CohomologyClass, c2: CohomologyClass) -> CohomologyClass:
    """Gerstenhaber bracket of two classes, with a coboundary witness when it vanishes."""
    if c1.complex is not c2.complex:
        raise ParentMismatch("classes in different complexes")
    cx = c1.complex
    rep = cx.bracket(c1.representative, c2.representative)
    if rep.is_zero():
        return CohomologyClass(cx, c1.degree + c2.degree - 1, rep, True, rep)
    zero, w = is_coboundary(cx, rep)
    return CohomologyClass(cx, cx.degree_of(rep), rep, zero, w)


__all__ = [
    "CobarComplex", "HochschildCochains", "BettiEntry", "BettiTable", "CohomologyClass",
    "COMPONENT_CAP", "as_complex", "differential_matrix", "betti", "representatives",
    "is_coboundary", "image_rank", "cohomology_class", "same_class", "class_bracket",
]
