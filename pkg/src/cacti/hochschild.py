"""The Hochschild complex C^{p,q}(A) = Hom(A^{(x)q}, A)_p with its Cacti operations.

A cochain is stored as dense coefficient tensors ``T[out, a_1, ..., a_q]``,
one per bidegree (p, q).  Operations are computed on the suspended side,
where a cochain f corresponds to f~ = f * (-1)^{sum_j e(a_j)(q - j)} with
e(a) = |a| + 1 mod 2, and the brace f~{g~_1..g~_k} carries the sign
(-1)^{sum_j ||g_j|| * (sum of e(w) over the inputs w before g_j)}.
Shifted degree ||f|| = p + q - 1 (total degree minus one).

With mu~ the suspended product and d~ = d_A:

* D f~ = -mu~{f~} + (-1)^{||f||} f~{mu~} + d~{f~} - (-1)^{||f||} f~{d~}
* f cup g = (-1)^{||f||} mu~{f~, g~}
* B_{k+1}(f, g_1..g_k) = (-1)^{|f|} f{g_1..g_k}

For ungraded A these reduce to D f = -delta f (delta the classical
coboundary) and (f cup g)(a, b) = f(a) g(b).
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping, Sequence

import numpy as np

from .algebra import AlgebraPresentation, AxiomReport
from .errors import NonHomogeneous, ParentMismatch, TruncationExceeded
from .scalar import FieldSpec

TENSOR_CAP = 10 ** 7
_SAFE = 1 << 62


# ---------------------------------------------------------------------------
# exact dense arrays: int64 where safe, Python objects otherwise
# ---------------------------------------------------------------------------

def _maxabs(a: np.ndarray) -> int:
    return int(np.abs(a).max()) if a.size else 0


def _as_obj(a: np.ndarray) -> np.ndarray:
    return a if a.dtype == object else a.astype(object)


def _demote(F: FieldSpec, a: np.ndarray) -> np.ndarray:
    """Canonical form: integral object arrays become int64 when they fit."""
    if a.dtype != object:
        return a
    if F.is_prime:
        a = np.mod(a, F.p)
        return a.astype(np.int64) if F.small_prime else a
    if a.size == 0:
        return a.astype(np.int64)
    flat = a.ravel()
    norm = [F.norm(x) for x in flat]
    if all(type(x) is int and -_SAFE < x < _SAFE for x in norm):
        return np.array(norm, dtype=np.int64).reshape(a.shape)
    out = np.empty(a.shape, dtype=object)
    out.ravel()[:] = norm
    return out


def _reduce(F: FieldSpec, a: np.ndarray) -> np.ndarray:
    if F.is_prime:
        return np.mod(a, F.p) if a.dtype != object else _demote(F, a)
    return _demote(F, a)


def _add(F: FieldSpec, a: np.ndarray, b: np.ndarray, sb: int = 1) -> np.ndarray:
    if a.dtype != object and b.dtype != object and (F.is_prime or _maxabs(a) + _maxabs(b) < _SAFE):
        return _reduce(F, a + sb * b)
    return _demote(F, _as_obj(a) + sb * _as_obj(b))


def _tensordot(F: FieldSpec, a: np.ndarray, b: np.ndarray, axes) -> np.ndarray:
    length = 1
    for ax in axes[1]:
        length *= b.shape[ax]
    if a.dtype != object and b.dtype != object:
        if F.is_prime or _maxabs(a) * _maxabs(b) * max(length, 1) < _SAFE:
            return _reduce(F, np.tensordot(a, b, axes=axes))
    return _demote(F, np.tensordot(_as_obj(a), _as_obj(b), axes=axes))


def _raw(x):
    return int(x) if isinstance(x, np.integer) else x


def _signs(vec: np.ndarray) -> np.ndarray:
    return np.where(vec % 2 == 1, -1, 1).astype(np.int64)


def _apply_axis_signs(a: np.ndarray, axis_signs: Sequence[np.ndarray | None]) -> np.ndarray:
    """Multiply axis t (t >= 1) of ``a`` by the +-1 vector ``axis_signs[t - 1]``."""
    out = a
    for t, s in enumerate(axis_signs, start=1):
        if s is None or np.all(s == 1):
            continue
        shape = [1] * a.ndim
        shape[t] = -1
        out = out * s.reshape(shape)
    return out


# ---------------------------------------------------------------------------
# the complex
# ---------------------------------------------------------------------------

class HochschildComplex:
    """Bookkeeping for C^{*,*}(A): degrees, parities and the suspended structure maps."""

    def __init__(self, A: AlgebraPresentation):
        self.A = A
        self.field = A.field
        self.dim = A.dim
        self.degrees = np.array(A.degrees, dtype=np.int64)
        self.parity = (self.degrees + 1) % 2
        F = self.field
        n = self.dim
        m = F.zeros((n, n, n))
        for (i, j), vec in A.mult.items():
            for k, c in vec.items():
                m[k, i, j] = c
        self.mult_tensor = _demote(F, m)
        d = F.zeros((n, n))
        for i, vec in A.differential.items():
            for k, c in vec.items():
                d[k, i] = c
        self.d_tensor = _demote(F, d)
        self.mu = self.shift(self.mult_tensor, 2)
        self._mu_cochain = None

    @property
    def graded(self) -> bool:
        return bool(self.degrees.any())

    @property
    def has_differential(self) -> bool:
        return bool(self.A.differential)

    def check_size(self, q: int) -> None:
        if self.dim ** (q + 1) > TENSOR_CAP:
            raise TruncationExceeded(f"dim(A)^(q+1) = {self.dim}^{q + 1} exceeds {TENSOR_CAP}")

    def shift(self, t: np.ndarray, q: int) -> np.ndarray:
        """Suspension sign (an involution) on an arity-q tensor."""
        if q < 2:
            return t
        signs = [_signs(self.parity * (q - j)) for j in range(1, q + 1)]
        return _apply_axis_signs(t, signs)

    def mask(self, p: int, q: int) -> np.ndarray:
        """Boolean tensor of the entries allowed in bidegree (p, q)."""
        deg = self.degrees
        total = deg.reshape([-1] + [1] * q)
        inputs = np.zeros([1] + [self.dim] * q, dtype=np.int64)
        for j in range(q):
            shape = [1] * (q + 1)
            shape[j + 1] = -1
            inputs = inputs + deg.reshape(shape)
        return (total - inputs) == p

    def internal_degrees(self, q: int) -> list[int]:
        """Internal degrees p for which C^{p,q} is nonzero."""
        deg = sorted(set(int(d) for d in self.degrees))
        ps = set()
        for out in deg:
            for ins in itertools.combinations_with_replacement(deg, q):
                ps.add(out - sum(ins))
        return sorted(ps)

    def zero(self) -> "Cochain":
        return Cochain(self, {})

    def mu_cochain(self) -> "Cochain":
        return Cochain(self, {(0, 2): self.mult_tensor})

    def identity(self) -> "Cochain":
        F = self.field
        t = F.zeros((self.dim, self.dim))
        for i in range(self.dim):
            t[i, i] = 1
        return Cochain(self, {(0, 1): _demote(F, t)})

    def element(self, vec: Mapping) -> "Cochain":
        """An element of A as an arity-0 cochain (homogeneous)."""
        F = self.field
        t = F.zeros((self.dim,))
        for i, c in vec.items():
            t[i] = F.coerce(c)
        degs = {int(self.degrees[i]) for i, c in vec.items() if c != 0}
        if len(degs) > 1:
            raise NonHomogeneous("inhomogeneous element of A")
        p = degs.pop() if degs else 0
        return Cochain(self, {(p, 0): _demote(F, t)})

    def from_map(self, q: int, func, p: int | None = None) -> "Cochain":
        """Cochain whose value on basis inputs (a_1..a_q) is ``func(a_1, ..., a_q)`` (an A vector)."""
        self.check_size(q)
        F = self.field
        t = F.zeros((self.dim,) * (q + 1))
        for ins in itertools.product(range(self.dim), repeat=q):
            for k, c in func(*ins).items():
                t[(k,) + ins] = F.coerce(c)
        return Cochain.from_tensor(self, q, _demote(F, t), p)

    def linear_map(self, matrix: Mapping, p: int = 0) -> "Cochain":
        """Arity-1 cochain from ``{source index: image vector}``."""
        return self.from_map(1, lambda a: matrix.get(a, {}), p)


_COMPLEXES: dict = {}


def hochschild(A: AlgebraPresentation) -> HochschildComplex:
    key = id(A)
    got = _COMPLEXES.get(key)
    if got is None or got.A is not A:
        got = HochschildComplex(A)
        _COMPLEXES[key] = got
    return got


class Cochain:
    """A finite sum of homogeneous Hochschild cochains, one tensor per bidegree (p, q)."""

    __slots__ = ("parent", "parts")

    def __init__(self, parent: HochschildComplex, parts: Mapping):
        self.parent = parent
        F = parent.field
        clean = {}
        for (p, q), t in parts.items():
            t = np.asarray(t)
            if t.shape != (parent.dim,) * (q + 1):
                raise ValueError(f"tensor of shape {t.shape} for arity {q}")
            if t.dtype != object and t.dtype != np.int64:
                t = t.astype(np.int64)
            t = _reduce(F, t)
            if np.any(t != 0):
                clean[(int(p), int(q))] = t
        self.parts = clean

    @classmethod
    def from_tensor(cls, parent: HochschildComplex, q: int, t: np.ndarray, p: int | None = None) -> "Cochain":
        """Split a tensor into bidegree parts (or check it is homogeneous of degree p)."""
        t = np.asarray(t)
        parts = {}
        for pp in parent.internal_degrees(q):
            msk = parent.mask(pp, q)
            piece = np.where(msk, t, 0)
            if piece.dtype != t.dtype:
                piece = piece.astype(t.dtype)
            if np.any(piece != 0):
                parts[(pp, q)] = piece
        if p is not None and any(k[0] != p for k in parts):
            raise NonHomogeneous(f"cochain is not of internal degree {p}")
        return cls(parent, parts)

    @property
    def field(self) -> FieldSpec:
        return self.parent.field

    def _check(self, other):
        if not isinstance(other, Cochain) or other.parent is not self.parent:
            raise ParentMismatch("cochains on different algebras")

    def __add__(self, other):
        self._check(other)
        return self._combine(other, 1)

    def __sub__(self, other):
        self._check(other)
        return self._combine(other, -1)

    def _combine(self, other, s):
        F = self.field
        parts = dict(self.parts)
        for k, t in other.parts.items():
            parts[k] = _add(F, parts[k], t, s) if k in parts else _reduce(F, s * t)
        return Cochain(self.parent, parts)

    def __neg__(self):
        return Cochain(self.parent, {k: _reduce(self.field, -t) for k, t in self.parts.items()})

    def scale(self, c) -> "Cochain":
        F = self.field
        c = F.coerce(c)
        out = {}
        for k, t in self.parts.items():
            if type(c) is int and t.dtype != object and (F.is_prime or abs(c) * _maxabs(t) < _SAFE):
                out[k] = _reduce(F, t * c)
            else:
                out[k] = _demote(F, _as_obj(t) * c)
        return Cochain(self.parent, out)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        if other.parent is not self.parent or set(self.parts) != set(other.parts):
            return False
        return all(np.array_equal(t, other.parts[k]) for k, t in self.parts.items())

    def __bool__(self):
        return bool(self.parts)

    def is_zero(self) -> bool:
        return not self.parts

    def bidegree(self) -> tuple[int, int] | None:
        if not self.parts:
            return None
        if len(self.parts) > 1:
            raise NonHomogeneous(f"cochain spans bidegrees {sorted(self.parts)}")
        return next(iter(self.parts))

    @property
    def p(self) -> int:
        b = self.bidegree()
        return 0 if b is None else b[0]

    @property
    def q(self) -> int:
        b = self.bidegree()
        return 0 if b is None else b[1]

    def total_degree(self) -> int | None:
        tots = {p + q for p, q in self.parts}
        if not tots:
            return None
        if len(tots) > 1:
            raise NonHomogeneous(f"cochain spans total degrees {sorted(tots)}")
        return tots.pop()

    def tensor(self, q: int | None = None) -> np.ndarray:
        """Sum of the parts of arity q as one tensor (q defaults to the unique arity)."""
        if q is None:
            qs = {k[1] for k in self.parts}
            if len(qs) > 1:
                raise NonHomogeneous("cochain has several arities")
            q = qs.pop() if qs else 0
        F = self.field
        t = F.zeros((self.parent.dim,) * (q + 1))
        for (p, qq), part in self.parts.items():
            if qq == q:
                t = _add(F, t, part)
        return t

    def __call__(self, *args: int) -> dict:
        """Value on basis inputs as a sparse A vector."""
        F = self.field
        out: dict = {}
        for (p, q), t in self.parts.items():
            if q != len(args):
                continue
            col = t[(slice(None),) + tuple(args)]
            for k in np.flatnonzero(col != 0):
                v = F.norm(out.get(int(k), 0) + _raw(col[k]))
                if v == 0:
                    out.pop(int(k), None)
                else:
                    out[int(k)] = v
        return out

    def entries(self) -> Iterable[tuple[tuple[int, int], tuple, object]]:
        F = self.field
        for (p, q), t in sorted(self.parts.items()):
            for idx in zip(*np.nonzero(t != 0)):
                idx = tuple(int(i) for i in idx)
                yield (p, q), idx, F.norm(_raw(t[idx]))

    def to_text(self) -> str:
        if not self.parts:
            return "0"
        F = self.field
        lab = self.parent.A.basis
        terms = []
        for (p, q), idx, x in self.entries():
            ins = ",".join(lab[i] for i in idx[1:])
            terms.append(f"{F.fmt(x)} * [{lab[idx[0]]}<-{ins}]")
        return " + ".join(terms)

    __str__ = to_text

    def __repr__(self):
        return f"Cochain({self.to_text()})"


# ---------------------------------------------------------------------------
# braces on the suspended side
# ---------------------------------------------------------------------------

def _brace_parts(C: HochschildComplex, ft: np.ndarray, qf: int,
                 gs: Sequence[tuple[np.ndarray, int, int]]) -> np.ndarray | None:
    """f~{g~_1..g~_k} for suspended tensors; gs holds (tensor, arity, shifted degree)."""
    F = C.field
    k = len(gs)
    if k > qf:
        return None
    qs = [g[1] for g in gs]
    N = qf + sum(q - 1 for q in qs)
    C.check_size(N)
    total = None
    for pos in itertools.combinations(range(qf), k):
        t = ft
        for j in range(k - 1, -1, -1):
            g, qg, _ = gs[j]
            s = pos[j]
            t = _tensordot(F, t, g, axes=([1 + s], [0]))
            if qg:
                t = np.moveaxis(t, list(range(t.ndim - qg, t.ndim)), list(range(1 + s, 1 + s + qg)))
        starts = []
        shift = 0
        for j in range(k):
            starts.append(pos[j] + shift)
            shift += qs[j] - 1
        axis_signs = []
        for tpos in range(N):
            e = sum(gs[j][2] for j in range(k) if tpos < starts[j])
            axis_signs.append(_signs(C.parity * e) if e % 2 else None)
        t = _apply_axis_signs(t, axis_signs)
        total = t if total is None else _add(F, total, t)
    return total


def _suspended_parts(f: Cochain) -> list[tuple[int, int, np.ndarray, int]]:
    C = f.parent
    return [(p, q, C.shift(t, q), p + q - 1) for (p, q), t in sorted(f.parts.items())]


def braces(f: Cochain, gs: Sequence[Cochain]) -> Cochain:
    """f{g_1, ..., g_k} (zero when k exceeds the arity of f)."""
    for g in gs:
        f._check(g)
    C = f.parent
    F = C.field
    if not gs:
        return f
    out: dict = {}
    g_parts = [_suspended_parts(g) for g in gs]
    for pf, qf, ft, _ in _suspended_parts(f):
        for combo in itertools.product(*g_parts):
            r = _brace_parts(C, ft, qf, [(t, q, s) for (_, q, t, s) in combo])
            if r is None:
                continue
            p = pf + sum(c[0] for c in combo)
            q = qf + sum(c[1] - 1 for c in combo)
            r = C.shift(r, q)
            out[(p, q)] = _add(F, out[(p, q)], r) if (p, q) in out else r
    return Cochain(C, out)


def shifted_degree(f: Cochain) -> int:
    t = f.total_degree()
    return 0 if t is None else t - 1


def hcup(f: Cochain, g: Cochain) -> Cochain:
    """f cup g = (-1)^{||f||} mu{f, g}."""
    f._check(g)
    C = f.parent
    F = C.field
    out: dict = {}
    mu = C.mu
    for pf, qf, ft, sf in _suspended_parts(f):
        for pg, qg, gt, sg in _suspended_parts(g):
            r = _brace_parts(C, mu, 2, [(ft, qf, sf), (gt, qg, sg)])
            q = qf + qg
            r = C.shift(r, q)
            if sf % 2:
                r = -r
            key = (pf + pg, q)
            out[key] = _add(F, out[key], r) if key in out else r
    return Cochain(C, out)


def hdifferential(f: Cochain, internal: bool = True, external: bool = True) -> Cochain:
    """D f, split as d_e (raises arity) + d_i (raises internal degree)."""
    C = f.parent
    F = C.field
    out: dict = {}

    def put(key, t, sign):
        if t is None:
            return
        t = C.shift(t, key[1])
        t = t if sign == 1 else -t
        out[key] = _add(F, out[key], t) if key in out else _reduce(F, t)

    mu = C.mu
    d = C.d_tensor
    for p, q, ft, s in _suspended_parts(f):
        sf = -1 if s % 2 else 1
        if external:
            put((p, q + 1), _brace_parts(C, mu, 2, [(ft, q, s)]), -1)
            put((p, q + 1), _brace_parts(C, ft, q, [(mu, 2, 1)]), sf)
        if internal and C.has_differential:
            put((p + 1, q), _brace_parts(C, d, 1, [(ft, q, s)]), 1)
            put((p + 1, q), _brace_parts(C, ft, q, [(d, 1, 1)]), -sf)
    return Cochain(C, out)


def d_external(f: Cochain) -> Cochain:
    return hdifferential(f, internal=False)


def d_internal(f: Cochain) -> Cochain:
    return hdifferential(f, external=False)


def hbrace(m: int, f: Cochain, gs: Sequence[Cochain]) -> Cochain:
    """B_m(f, g_1..g_{m-1}) = (-1)^{|f|} f{g_1..g_{m-1}}."""
    if m < 2 or len(gs) != m - 1:
        raise ValueError(f"B_{m} takes exactly {m - 1} arguments after f")
    t = f.total_degree()
    r = braces(f, gs)
    return -r if t is not None and t % 2 else r


def hstar(f: Cochain, g: Cochain) -> Cochain:
    return braces(f, [g])


def hgbracket(f: Cochain, g: Cochain) -> Cochain:
    """[f, g] = f*g - (-1)^{||f|| ||g||} g*f."""
    sf, sg = shifted_degree(f), shifted_degree(g)
    fg, gf = hstar(f, g), hstar(g, f)
    return fg + gf if (sf * sg) % 2 else fg - gf


# ---------------------------------------------------------------------------
# linear maps of A
# ---------------------------------------------------------------------------

def _compose(A: AlgebraPresentation, f: Mapping, g: Mapping) -> dict:
    """Matrix of f o g for maps stored as ``{source: image vector}``."""
    return {i: A.apply(f, g.get(i, {})) for i in range(A.dim) if A.apply(f, g.get(i, {}))}


def _identity_map(A: AlgebraPresentation) -> dict:
    return {i: {i: 1} for i in range(A.dim)}


def _maps_equal(A: AlgebraPresentation, f: Mapping, g: Mapping) -> bool:
    return all(dict(f.get(i, {})) == dict(g.get(i, {})) for i in range(A.dim))


def is_algebra_automorphism(A: AlgebraPresentation, g: Mapping) -> tuple[bool, str | None]:
    """(passes?, first witness) for unital, multiplicative, degree 0 and invertible."""
    from .linalg import SparseMatrix, rank
    lab = A.basis
    if dict(g.get(A.unit, {})) != {A.unit: 1}:
        return False, f"g({lab[A.unit]}) != {lab[A.unit]}"
    for i in range(A.dim):
        for k in g.get(i, {}):
            if A.degrees[k] != A.degrees[i]:
                return False, f"g({lab[i]}) not of degree {A.degrees[i]}"
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = A.apply(g, A.mul_basis(i, j))
            rhs = A.mul(g.get(i, {}), g.get(j, {}))
            if lhs != rhs:
                return False, f"g({lab[i]}*{lab[j]}) != g({lab[i]})g({lab[j]})"
    M = SparseMatrix.from_columns(A.field, A.dim, [g.get(i, {}) for i in range(A.dim)])
    if rank(M) != A.dim:
        return False, "g is not invertible"
    return True, None


def skew_derivation_defect(A: AlgebraPresentation, d: Mapping, g: Mapping, h: Mapping) -> str | None:
    """First basis pair violating d(ab) = g(a)d(b) + d(a)h(b), or None."""
    F = A.field
    lab = A.basis
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = A.apply(d, A.mul_basis(i, j))
            rhs = dict(A.mul(g.get(i, {}), d.get(j, {})))
            for k, c in A.mul(d.get(i, {}), h.get(j, {})).items():
                v = F.norm(rhs.get(k, 0) + c)
                if v:
                    rhs[k] = v
                else:
                    rhs.pop(k, None)
            if lhs != rhs:
                return f"({lab[i]},{lab[j]})"
    return None


class SkewDerivationChain:
    """Skew-derivations d_i with d_i(ab) = g_i(a) d_i(b) + d_i(a) h_i(b)."""

    def __init__(self, A: AlgebraPresentation, ds: Sequence[Mapping], gs: Sequence[Mapping],
                 hs: Sequence[Mapping], validate: bool = True):
        if not (len(ds) == len(gs) == len(hs)) or not ds:
            raise ValueError("a chain needs n >= 1 triples (d_i, g_i, h_i)")
        self.A = A
        self.ds = [_clean_map(A, d) for d in ds]
        self.gs = [_clean_map(A, g) for g in gs]
        self.hs = [_clean_map(A, h) for h in hs]
        if validate:
            from .errors import MalformedPresentation
            for i, (d, g, h) in enumerate(zip(self.ds, self.gs, self.hs), start=1):
                for name, auto in (("g", g), ("h", h)):
                    ok, why = is_algebra_automorphism(A, auto)
                    if not ok:
                        raise MalformedPresentation(f"{name}_{i} is not an automorphism: {why}")
                bad = skew_derivation_defect(A, d, g, h)
                if bad:
                    raise MalformedPresentation(f"d_{i} is not a (g_{i}, h_{i})-derivation at {bad}")

    @property
    def n(self) -> int:
        return len(self.ds)

    def violations(self) -> list[str]:
        A = self.A
        ident = _identity_map(A)
        out = []
        if not _maps_equal(A, self.gs[0], ident):
            out.append("g_1 != Id")
        for i in range(self.n - 1):
            if not _maps_equal(A, self.hs[i], self.gs[i + 1]):
                out.append(f"h_{i + 1} != g_{i + 2}")
        if not _maps_equal(A, self.hs[-1], ident):
            out.append(f"h_{self.n} != Id")
        return out


def _clean_map(A: AlgebraPresentation, m: Mapping) -> dict:
    out = {}
    for i, vec in m.items():
        i = A.index(i) if isinstance(i, str) else int(i)
        v = A.vec(vec)
        if v:
            out[i] = v
    return out


class SkewCocycle:
    """Result of :func:`skew_cocycle`: the cochain plus compatibility flags."""

    def __init__(self, cochain: Cochain, violations: list[str]):
        self.cochain = cochain
        self.violations = violations

    @property
    def compatible(self) -> bool:
        return not self.violations

    def __iter__(self):
        return iter((self.cochain, self.compatible))


def skew_cocycle(A: AlgebraPresentation, chain: SkewDerivationChain, strict: bool = False) -> SkewCocycle:
    """f(a_1..a_n) = d_1(a_1) ... d_n(a_n); a cocycle when g_1 = h_n = Id and h_i = g_{i+1}."""
    from .errors import IncompatibleChain
    C = hochschild(A)
    viol = chain.violations()
    if strict and viol:
        raise IncompatibleChain("; ".join(viol))

    def value(*ins):
        acc = {A.unit: 1}
        for d, a in zip(chain.ds, ins):
            acc = A.mul(acc, d.get(a, {}))
            if not acc:
                break
        return acc

    return SkewCocycle(C.from_map(chain.n, value), viol)


def inner_skew_derivation(A: AlgebraPresentation, c: Mapping, g: Mapping, h: Mapping) -> dict:
    """d(a) = c h(a) - g(a) c, a (g, h)-skew-derivation for automorphisms g, h."""
    F = A.field
    c = A.vec(c)
    out = {}
    for a in range(A.dim):
        v = dict(A.mul(c, h.get(a, {})))
        for k, x in A.mul(g.get(a, {}), c).items():
            y = F.norm(v.get(k, 0) - x)
            if y:
                v[k] = y
            else:
                v.pop(k, None)
        if v:
            out[a] = v
    return out


# ---------------------------------------------------------------------------
# identity checking
# ---------------------------------------------------------------------------

def derivation_basis(C: HochschildComplex) -> list[Cochain]:
    """Degree-0 derivations of A (kernel of d_e on C^{0,1}), as a basis."""
    from .linalg import SparseMatrix, rank_kernel
    n = C.dim
    msk = C.mask(0, 1)
    cols = []
    slots = [(int(k), int(i)) for k, i in zip(*np.nonzero(msk))]
    F = C.field
    for (k, i) in slots:
        t = F.zeros((n, n))
        t[k, i] = 1
        img = d_external(Cochain(C, {(0, 1): t})).tensor(2)
        cols.append({int(j): _raw(img.ravel()[j]) for j in np.flatnonzero(img.ravel() != 0)})
    M = SparseMatrix.from_columns(F, n ** 3, cols)
    _, ker = rank_kernel(M)
    out = []
    for vec in ker:
        t = F.zeros((n, n))
        for s, c in vec.items():
            t[slots[s]] = c
        out.append(Cochain(C, {(0, 1): _demote(F, t)}))
    return out


def _invert_element(A: AlgebraPresentation, u: Mapping) -> dict | None:
    from .linalg import SparseMatrix, solve
    cols = [A.mul(u, {j: 1}) for j in range(A.dim)]
    M = SparseMatrix.from_columns(A.field, A.dim, cols)
    v = solve(M, {A.unit: 1})
    if v is None or A.mul(v, u) != {A.unit: 1}:
        return None
    return v


class HochschildModel:
    """C*(A) as a model for :mod:`cacti.identities`."""

    def __init__(self, A: AlgebraPresentation, max_ext: int = 3, cap: int = 5):
        self.C = hochschild(A)
        self.A = A
        self.name = f"C*({A.name}) over {A.field}"
        self.max_ext = max_ext
        self.cap = max(cap, max_ext + 1)
        self._derivations = None

    def zero(self):
        return self.C.zero()

    def sdeg(self, a):
        return shifted_degree(a)

    def ext(self, a):
        return a.q

    cup = staticmethod(hcup)
    braces = staticmethod(braces)
    d = staticmethod(hdifferential)

    def sample(self, rng, ext: int):
        C = self.C
        F = C.field
        p = rng.choice(C.internal_degrees(ext))
        msk = C.mask(p, ext)
        t = F.zeros(msk.shape)
        idx = np.nonzero(msk)
        vals = [rng.randint(-3, 3) for _ in range(len(idx[0]))]
        t[idx] = vals
        return Cochain(C, {(p, ext): _reduce(F, t)})

    def _automorphism(self, rng) -> dict:
        A = self.A
        if A.degrees and any(A.degrees) and rng.random() < 0.5:
            return {i: {i: -1 if A.degrees[i] % 2 else 1} for i in range(A.dim)}
        for _ in range(20):
            u = {i: rng.randint(-2, 2) for i in range(A.dim) if A.degrees[i] == 0}
            u = A.vec({i: c for i, c in u.items() if c})
            inv = _invert_element(A, u) if u else None
            if inv is not None:
                return {a: A.mul(A.mul(u, {a: 1}), inv) for a in range(A.dim)}
        return _identity_map(A)

    def diag_sample(self, rng):
        C = self.C
        if self._derivations is None:
            self._derivations = derivation_basis(C)
        if self._derivations and rng.random() < 0.5:
            x = self.zero()
            for D in self._derivations:
                c = rng.randint(-3, 3)
                if c:
                    x = x + D.scale(c)
            return x, [(1, x, None), (1, None, x)]
        g = C.linear_map(self._automorphism(rng))
        return g - C.identity(), [(1, g, g), (-1, None, None)]

    def act(self, h, y):
        return y if h is None else braces(h, [y])

    def basis_elements(self, ext: int):
        C = self.C
        F = C.field
        for p in C.internal_degrees(ext):
            msk = C.mask(p, ext)
            for idx in zip(*np.nonzero(msk)):
                t = F.zeros(msk.shape)
                t[idx] = 1
                yield Cochain(C, {(p, ext): t})

    def render(self, a) -> str:
        return a.to_text()


def well_graded_report(A: AlgebraPresentation, max_q: int = 3, samples: int = 100, seed: int = 0,
                       identities: Sequence[str] | None = None) -> AxiomReport:
    """Run the Cacti identity suite on the Hochschild operations of A."""
    from .identities import IDENTITY_IDS, run_suite
    return run_suite(HochschildModel(A, max_q), samples, seed, identities or IDENTITY_IDS)


# ---------------------------------------------------------------------------
# cochain files
# ---------------------------------------------------------------------------

def cochain_to_dict(f: Cochain) -> dict:
    p, q = f.bidegree() or (0, 0)
    F = f.field
    lab = f.parent.A.basis
    coeffs = {}
    for _, idx, x in f.entries():
        coeffs[f"{lab[idx[0]]}<-{','.join(lab[i] for i in idx[1:])}"] = F.fmt(x)
    return {"parent": f.parent.A.name, "p": p, "q": q, "coeffs": coeffs}


def cochain_from_dict(C: HochschildComplex, data: Mapping) -> Cochain:
    from .errors import ParseError
    A = C.A
    F = C.field
    try:
        p, q = int(data["p"]), int(data["q"])
        t = F.zeros((C.dim,) * (q + 1))
        for key, val in data.get("coeffs", {}).items():
            out, _, ins = key.partition("<-")
            args = [s.strip() for s in ins.split(",")] if ins.strip() else []
            if len(args) != q:
                raise ParseError(f"{key!r} does not have {q} inputs")
            t[tuple([A.index(out.strip())] + [A.index(a) for a in args])] = F.coerce(val)
    except KeyError as exc:
        raise ParseError(f"cochain file missing {exc.args[0]!r}") from None
    return Cochain.from_tensor(C, q, _demote(F, t), p)
