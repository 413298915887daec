"""Finite-dimensional graded (co/bi)algebras given by structure constants.

Basis elements are addressed by integer index; ``basis[i]`` is the label.
Structure constants are sparse dicts of raw scalars (see :mod:`cacti.scalar`).
The unit of an algebra is always one of the basis elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from ._sparse import add_into, clean
from .errors import MalformedPresentation, NotABialgebraMorphism
from .scalar import FieldSpec, QQ


@dataclass
class AxiomResult:
    name: str
    passed: bool
    checked: int = 0
    witness: str | None = None
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        s = f"{status}  {self.name}  (checked {self.checked})"
        if self.witness is not None:
            s += f"  witness: {self.witness}"
        if self.detail:
            s += f"  [{self.detail}]"
        return s


class AxiomReport:
    """Ordered collection of named pass/fail results."""

    def __init__(self, subject: str = "", results: Iterable[AxiomResult] = ()):
        self.subject = subject
        self.results: list[AxiomResult] = list(results)

    def add(self, name, passed, checked=0, witness=None, detail="") -> AxiomResult:
        r = AxiomResult(name, bool(passed), checked, witness, detail)
        self.results.append(r)
        return r

    def extend(self, other: "AxiomReport", prefix: str = "") -> None:
        for r in other.results:
            self.results.append(AxiomResult(prefix + r.name, r.passed, r.checked, r.witness, r.detail))

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.passed]

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(r.name == name for r in self.results)

    def names(self) -> list[str]:
        return [r.name for r in self.results]

    def to_text(self) -> str:
        head = f"# {self.subject}" if self.subject else "#"
        lines = [head] + [r.line() for r in self.results]
        lines.append("ALL PASS" if self.passed else f"{len(self.failures())} FAILURE(S)")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "results": [
                {"name": r.name, "passed": r.passed, "checked": r.checked,
                 "witness": r.witness, "detail": r.detail}
                for r in self.results
            ],
        }

    def __repr__(self):
        return f"AxiomReport({self.subject!r}, passed={self.passed}, n={len(self.results)})"


class _Recorder:
    """Collects the first witness of a failing exhaustive check."""

    def __init__(self, report: AxiomReport, name: str):
        self.report, self.name = report, name
        self.checked = 0
        self.witness = None

    def check(self, ok: bool, witness) -> None:
        self.checked += 1
        if not ok and self.witness is None:
            self.witness = witness

    def close(self, detail="") -> None:
        self.report.add(self.name, self.witness is None, self.checked, self.witness, detail)


def _vec_eq(u: Mapping, v: Mapping) -> bool:
    return {k: x for k, x in u.items() if x != 0} == {k: x for k, x in v.items() if x != 0}


class AlgebraPresentation:
    """Unital associative (d.g.) algebra on a labelled basis."""

    is_bialgebra = False

    def __init__(
        self,
        name: str,
        field: FieldSpec,
        basis: Sequence[str],
        degrees: Sequence[int] | None,
        unit: int | str,
        mult: Mapping,
        differential: Mapping | None = None,
    ):
        self.name = name
        self.field = field
        self.basis = tuple(str(b) for b in basis)
        n = len(self.basis)
        if len(set(self.basis)) != n:
            raise MalformedPresentation("duplicate basis labels")
        self.degrees = tuple(int(d) for d in degrees) if degrees is not None else (0,) * n
        if len(self.degrees) != n:
            raise MalformedPresentation("degrees length does not match basis")
        self._index = {b: i for i, b in enumerate(self.basis)}
        self.unit = self._resolve(unit)
        self.mult = self._clean_table(mult, arity=2)
        self.differential = self._clean_table(differential, arity=1) if differential else {}

    # -- construction helpers ------------------------------------------------

    def _resolve(self, key) -> int:
        if isinstance(key, str):
            if key not in self._index:
                raise MalformedPresentation(f"unknown basis label {key!r}")
            return self._index[key]
        key = int(key)
        if not 0 <= key < len(self.basis):
            raise MalformedPresentation(f"basis index {key} out of range")
        return key

    def _clean_vec(self, vec: Mapping) -> dict:
        out: dict = {}
        for k, c in vec.items():
            add_into(out, self._resolve(k), self.field.coerce(c), self.field)
        return out

    def _clean_table(self, table: Mapping | None, arity: int) -> dict:
        out = {}
        for key, vec in (table or {}).items():
            if arity == 1:
                k = self._resolve(key)
            else:
                if len(key) != arity:
                    raise MalformedPresentation(f"bad structure constant key {key!r}")
                k = tuple(self._resolve(x) for x in key)
            v = self._clean_vec(vec)
            if v:
                out[k] = v
        return out

    # -- basic accessors -----------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, label: str) -> int:
        return self._resolve(label)

    def label(self, i: int) -> str:
        return self.basis[i]

    @property
    def has_differential(self) -> bool:
        return bool(self.differential)

    @property
    def is_trivially_graded(self) -> bool:
        return not any(self.degrees)

    def basis_vector(self, i: int) -> dict:
        return {i: 1}

    def vec(self, mapping: Mapping) -> dict:
        """Sparse vector from ``{label_or_index: scalar}``."""
        return self._clean_vec(mapping)

    def mul_basis(self, i: int, j: int) -> dict:
        return self.mult.get((i, j), {})

    def mul(self, u: Mapping, v: Mapping) -> dict:
        F = self.field
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                ab = F.norm(a * b)
                for k, c in self.mult.get((i, j), {}).items():
                    add_into(out, k, ab * c, F)
        return out

    def d_vec(self, u: Mapping) -> dict:
        F = self.field
        out: dict = {}
        for i, a in u.items():
            for k, c in self.differential.get(i, {}).items():
                add_into(out, k, a * c, F)
        return out

    def apply(self, matrix: Mapping, u: Mapping) -> dict:
        """Apply a linear map stored as ``{source_index: image_vector}``."""
        F = self.field
        out: dict = {}
        for i, a in u.items():
            for k, c in matrix.get(i, {}).items():
                add_into(out, k, a * c, F)
        return out

    def degree_of(self, u: Mapping) -> int | None:
        degs = {self.degrees[i] for i, c in u.items() if c != 0}
        if not degs:
            return None
        if len(degs) > 1:
            raise MalformedPresentation("inhomogeneous vector")
        return degs.pop()

    def fmt_vec(self, u: Mapping) -> str:
        if not u:
            return "0"
        parts = []
        for i in sorted(u):
            parts.append(f"{self.field.fmt(u[i])}*{self.basis[i]}")
        return " + ".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}({self.name!r}, dim={self.dim}, field={self.field})"

    # -- equality of structure constants -------------------------------------

    def same_constants(self, other: "AlgebraPresentation") -> bool:
        return (
            self.field == other.field
            and self.basis == other.basis
            and self.degrees == other.degrees
            and self.unit == other.unit
            and self.mult == other.mult
            and self.differential == other.differential
        )


class BialgebraPresentation(AlgebraPresentation):
    """Unital counital (d.g.) bialgebra on a labelled basis."""

    is_bialgebra = True

    def __init__(self, name, field, basis, degrees, unit, mult, comult, counit, differential=None):
        super().__init__(name, field, basis, degrees, unit, mult, differential)
        self.comult = {}
        for key, terms in (comult or {}).items():
            i = self._resolve(key)
            out: dict = {}
            for (a, b), c in terms.items():
                add_into(out, (self._resolve(a), self._resolve(b)), self.field.coerce(c), self.field)
            if out:
                self.comult[i] = out
        eps = [0] * self.dim
        if isinstance(counit, Mapping):
            for k, c in counit.items():
                eps[self._resolve(k)] = self.field.coerce(c)
        else:
            if len(counit) != self.dim:
                raise MalformedPresentation("counit length does not match basis")
            eps = [self.field.coerce(c) for c in counit]
        self.counit = tuple(eps)
        self._iter_cache: dict = {}

    def delta_basis(self, i: int) -> dict:
        return self.comult.get(i, {})

    def delta(self, u: Mapping) -> dict:
        F = self.field
        out: dict = {}
        for i, a in u.items():
            for jk, c in self.comult.get(i, {}).items():
                add_into(out, jk, a * c, F)
        return out

    def eps(self, u: Mapping):
        F = self.field
        return F.norm(sum((a * self.counit[i] for i, a in u.items()), 0))

    def tensor_mul(self, s: Mapping, t: Mapping) -> dict:
        """Product in H (x) H with the Koszul rule (a(x)b)(c(x)d) = (-1)^{|b||c|} ac(x)bd."""
        F = self.field
        out: dict = {}
        deg = self.degrees
        for (a, b), x in s.items():
            for (c, d), y in t.items():
                xy = x * y
                if deg[b] * deg[c] % 2:
                    xy = -xy
                for k, u in self.mult.get((a, c), {}).items():
                    for l, v in self.mult.get((b, d), {}).items():
                        add_into(out, (k, l), xy * u * v, F)
        return out

    def iterated_coproduct(self, i: int, m: int) -> dict:
        """Full m-fold coproduct of basis element ``i`` as ``{(b1..bm): coeff}``."""
        key = (i, m)
        if key in self._iter_cache:
            return self._iter_cache[key]
        F = self.field
        if m == 1:
            res = {(i,): 1}
        else:
            prev = self.iterated_coproduct(i, m - 1)
            res = {}
            for word, c in prev.items():
                for (a, b), x in self.comult.get(word[0], {}).items():
                    add_into(res, (a, b) + word[1:], c * x, F)
        self._iter_cache[key] = res
        return res

    def grouplikes(self) -> list[int]:
        """Basis indices b with Delta b = b (x) b and eps(b) = 1."""
        return [i for i in range(self.dim)
                if self.comult.get(i, {}) == {(i, i): 1} and self.counit[i] == 1]

    def same_constants(self, other) -> bool:
        return (
            super().same_constants(other)
            and getattr(other, "comult", None) == self.comult
            and getattr(other, "counit", None) == self.counit
        )


# ---------------------------------------------------------------------------
# axiom checks
# ---------------------------------------------------------------------------

def check_axioms(P: AlgebraPresentation) -> AxiomReport:
    """Exhaustive check of every structure axiom over basis tuples."""
    rep = AxiomReport(f"axioms of {P.name}")
    F = P.field
    n = P.dim
    lab = P.basis
    deg = P.degrees
    rng = range(n)

    r = _Recorder(rep, "grading")
    for (i, j), vec in P.mult.items():
        for k in vec:
            r.check(deg[k] == deg[i] + deg[j], f"{lab[i]}*{lab[j]} -> {lab[k]}")
    for i, vec in P.differential.items():
        for k in vec:
            r.check(deg[k] == deg[i] + 1, f"d({lab[i]}) -> {lab[k]}")
    if P.is_bialgebra:
        for i, terms in P.comult.items():
            for (a, b) in terms:
                r.check(deg[a] + deg[b] == deg[i], f"Delta({lab[i]}) -> {lab[a]}|{lab[b]}")
        for i in rng:
            r.check(P.counit[i] == 0 or deg[i] == 0, f"eps({lab[i]})")
    r.close()

    r = _Recorder(rep, "associativity")
    for i in rng:
        for j in rng:
            ij = P.mul_basis(i, j)
            for k in rng:
                lhs = P.mul(ij, {k: 1})
                rhs = P.mul({i: 1}, P.mul_basis(j, k))
                r.check(_vec_eq(lhs, rhs), f"({lab[i]},{lab[j]},{lab[k]})")
    r.close()

    r = _Recorder(rep, "unit")
    u = P.unit
    for i in rng:
        r.check(_vec_eq(P.mul_basis(u, i), {i: 1}) and _vec_eq(P.mul_basis(i, u), {i: 1}), lab[i])
    r.close()

    if P.has_differential or P.is_bialgebra:
        r = _Recorder(rep, "d_squared")
        for i in rng:
            r.check(not P.d_vec(P.d_vec({i: 1})), lab[i])
        r.close()

        r = _Recorder(rep, "d_derivation")
        for i in rng:
            for j in rng:
                lhs = P.d_vec(P.mul_basis(i, j))
                sign = -1 if deg[i] % 2 else 1
                rhs = clean({}, F)
                for k, c in P.mul(P.d_vec({i: 1}), {j: 1}).items():
                    add_into(rhs, k, c, F)
                for k, c in P.mul({i: 1}, P.d_vec({j: 1})).items():
                    add_into(rhs, k, sign * c, F)
                r.check(_vec_eq(lhs, rhs), f"({lab[i]},{lab[j]})")
        r.close()

    if not P.is_bialgebra:
        return rep

    H: BialgebraPresentation = P  # type: ignore[assignment]

    r = _Recorder(rep, "coassociativity")
    for i in rng:
        left: dict = {}
        right: dict = {}
        for (a, b), c in H.delta_basis(i).items():
            for (x, y), e in H.delta_basis(a).items():
                add_into(left, (x, y, b), c * e, F)
            for (x, y), e in H.delta_basis(b).items():
                add_into(right, (a, x, y), c * e, F)
        r.check(_vec_eq(left, right), lab[i])
    r.close()

    r = _Recorder(rep, "counit")
    for i in rng:
        left = {}
        right = {}
        for (a, b), c in H.delta_basis(i).items():
            add_into(left, a, c * H.counit[b], F)
            add_into(right, b, c * H.counit[a], F)
        r.check(_vec_eq(left, {i: 1}) and _vec_eq(right, {i: 1}), lab[i])
    r.close()

    r = _Recorder(rep, "delta_multiplicative")
    r.check(_vec_eq(H.delta_basis(H.unit), {(H.unit, H.unit): 1}), f"Delta({lab[H.unit]})")
    for i in rng:
        for j in rng:
            lhs = H.delta(H.mul_basis(i, j))
            rhs = H.tensor_mul(H.delta_basis(i), H.delta_basis(j))
            r.check(_vec_eq(lhs, rhs), f"({lab[i]},{lab[j]})")
    r.close()

    r = _Recorder(rep, "eps_multiplicative")
    r.check(H.counit[H.unit] == 1, f"eps({lab[H.unit]})")
    for i in rng:
        for j in rng:
            r.check(H.eps(H.mul_basis(i, j)) == F.norm(H.counit[i] * H.counit[j]), f"({lab[i]},{lab[j]})")
    r.close()

    r = _Recorder(rep, "d_coderivation")
    for i in rng:
        lhs: dict = {}
        for (a, b), c in H.delta(H.d_vec({i: 1})).items():
            add_into(lhs, (a, b), c, F)
        rhs: dict = {}
        for (a, b), c in H.delta_basis(i).items():
            for k, e in H.differential.get(a, {}).items():
                add_into(rhs, (k, b), c * e, F)
            s = -1 if deg[a] % 2 else 1
            for k, e in H.differential.get(b, {}).items():
                add_into(rhs, (a, k), s * c * e, F)
        r.check(_vec_eq(lhs, rhs), lab[i])
    r.close()
    return rep


# ---------------------------------------------------------------------------
# counit kernel
# ---------------------------------------------------------------------------

class CounitKernel:
    """V = Ker(eps) with basis b - eps(b) 1_H for the non-unit basis elements b.

    Coordinates: V index ``v`` corresponds to H index ``hidx[v]``.  The
    projection pi: H -> V drops the unit coordinate, because
    h = sum_b c_b (b - eps(b)1) + (c_1 + sum_b c_b eps(b)) 1.
    """

    def __init__(self, H: BialgebraPresentation):
        self.parent = H
        self.field = H.field
        self.hidx = tuple(i for i in range(H.dim) if i != H.unit)
        self._vpos = {h: v for v, h in enumerate(self.hidx)}
        labels = []
        for h in self.hidx:
            lab = H.basis[h]
            labels.append(f"u_{lab}" if H.counit[h] != 0 else lab)
        self.labels = tuple(labels)
        self.degrees = tuple(H.degrees[h] for h in self.hidx)
        self._reduced = [self._compute_reduced(v) for v in range(self.dim)]
        self._dint = [self.project(H.d_vec(self.include({v: 1}))) for v in range(self.dim)]
        self._left_mult: dict = {}
        self._letter_mult = None

    @property
    def dim(self) -> int:
        return len(self.hidx)

    @property
    def vbasis(self) -> list[dict]:
        """V basis vectors as H vectors."""
        return [self.include({v: 1}) for v in range(self.dim)]

    def include(self, v: Mapping) -> dict:
        H = self.parent
        F = self.field
        out: dict = {}
        for k, c in v.items():
            h = self.hidx[k]
            add_into(out, h, c, F)
            add_into(out, H.unit, -c * H.counit[h], F)
        return out

    def project(self, h: Mapping) -> dict:
        u = self.parent.unit
        return {self._vpos[i]: c for i, c in h.items() if i != u and c != 0}

    def projection_matrix(self) -> list[list]:
        H = self.parent
        return [[1 if (hi == j) else 0 for j in range(H.dim)] for hi in self.hidx]

    def inclusion_matrix(self) -> list[list]:
        cols = [self.include({v: 1}) for v in range(self.dim)]
        return [[cols[v].get(i, 0) for v in range(self.dim)] for i in range(self.parent.dim)]

    def _compute_reduced(self, v: int) -> dict:
        H = self.parent
        F = self.field
        out: dict = {}
        for (a, b), c in H.delta(self.include({v: 1})).items():
            if a == H.unit or b == H.unit:
                continue
            add_into(out, (self._vpos[a], self._vpos[b]), c, F)
        return out

    def reduced_coproduct(self, v: int) -> dict:
        """Delta'(v) = (pi (x) pi) Delta(v) as ``{(i, j): coeff}`` over V indices."""
        return self._reduced[v]

    def internal_differential(self, v: int) -> dict:
        return self._dint[v]

    def letter_product(self, x: int, y: int) -> dict:
        """pi(x . y) for V letters x, y (an element of V)."""
        H = self.parent
        return self.project(H.mul(self.include({x: 1}), self.include({y: 1})))

    def left_action(self, h: int, y: int) -> dict:
        """pi(b . y) for an H basis element b and a V letter y."""
        key = (h, y)
        got = self._left_mult.get(key)
        if got is None:
            H = self.parent
            got = self.project(H.mul({h: 1}, self.include({y: 1})))
            self._left_mult[key] = got
        return got

    def letter_in_h(self, v: int) -> dict:
        return self.include({v: 1})

    def index(self, label: str) -> int:
        return self.labels.index(label)


def counit_kernel(H: BialgebraPresentation) -> CounitKernel:
    return CounitKernel(H)


# ---------------------------------------------------------------------------
# morphisms
# ---------------------------------------------------------------------------

class MorphismMatrix:
    """Linear map source -> target stored as images of source basis vectors."""

    def __init__(self, source: AlgebraPresentation, target: AlgebraPresentation, images: Mapping):
        if source.field != target.field:
            raise MalformedPresentation("source and target over different fields")
        self.source, self.target = source, target
        self.images = {}
        for key, vec in images.items():
            i = source._resolve(key)
            v = target._clean_vec(vec)
            if v:
                self.images[i] = v

    @classmethod
    def identity(cls, P: AlgebraPresentation) -> "MorphismMatrix":
        return cls(P, P, {i: {i: 1} for i in range(P.dim)})

    def __call__(self, u: Mapping) -> dict:
        return self.target.apply(self.images, u)

    def matrix(self) -> list[list]:
        return [[self.images.get(j, {}).get(i, 0) for j in range(self.source.dim)]
                for i in range(self.target.dim)]


def check_bialgebra_morphism(f: MorphismMatrix) -> AxiomReport:
    S, T = f.source, f.target
    F = S.field
    rep = AxiomReport(f"morphism {S.name} -> {T.name}")
    lab = S.basis
    rng = range(S.dim)

    r = _Recorder(rep, "degree")
    for i, img in f.images.items():
        for k in img:
            r.check(T.degrees[k] == S.degrees[i], lab[i])
    r.close()

    r = _Recorder(rep, "multiplicative")
    for i in rng:
        for j in rng:
            r.check(_vec_eq(f(S.mul_basis(i, j)), T.mul(f({i: 1}), f({j: 1}))), f"({lab[i]},{lab[j]})")
    r.close()

    r = _Recorder(rep, "unital")
    r.check(_vec_eq(f({S.unit: 1}), {T.unit: 1}), lab[S.unit])
    r.close()

    r = _Recorder(rep, "commutes_with_d")
    for i in rng:
        r.check(_vec_eq(f(S.d_vec({i: 1})), T.d_vec(f({i: 1}))), lab[i])
    r.close()

    if S.is_bialgebra and T.is_bialgebra:
        r = _Recorder(rep, "comultiplicative")
        for i in rng:
            lhs = T.delta(f({i: 1}))
            rhs: dict = {}
            for (a, b), c in S.delta_basis(i).items():
                for k, x in f({a: 1}).items():
                    for l, y in f({b: 1}).items():
                        add_into(rhs, (k, l), c * x * y, F)
            r.check(_vec_eq(lhs, rhs), lab[i])
        r.close()

        r = _Recorder(rep, "counital")
        for i in rng:
            r.check(T.eps(f({i: 1})) == S.counit[i], lab[i])
        r.close()
    return rep


# ---------------------------------------------------------------------------
# exact small dense linear algebra for basis changes
# ---------------------------------------------------------------------------

def _inverse(mat: list[list], F: FieldSpec) -> list[list]:
    n = len(mat)
    a = [[F.coerce(x) for x in row] + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise MalformedPresentation("basis change is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = F.inv(a[col][col])
        a[col] = [F.mul(x, inv) for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                fac = a[r][col]
                a[r] = [F.sub(x, F.mul(fac, y)) for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def change_basis(P: AlgebraPresentation, vectors: Sequence[Mapping], labels: Sequence[str],
                 unit: int, name: str | None = None) -> AlgebraPresentation:
    """Re-express ``P`` in the basis whose k-th element is ``vectors[k]`` (old coordinates)."""
    F = P.field
    n = P.dim
    if len(vectors) != n:
        raise MalformedPresentation("basis change needs dim vectors")
    T = [[vectors[k].get(i, 0) for k in range(n)] for i in range(n)]
    Tinv = _inverse(T, F)

    def to_new(u: Mapping) -> dict:
        out: dict = {}
        for i, c in u.items():
            for k in range(n):
                if Tinv[k][i] != 0:
                    add_into(out, k, c * Tinv[k][i], F)
        return out

    degrees = [P.degree_of(v) or 0 for v in vectors]
    mult = {}
    for a in range(n):
        for b in range(n):
            v = to_new(P.mul(vectors[a], vectors[b]))
            if v:
                mult[(a, b)] = v
    diff = {}
    for a in range(n):
        v = to_new(P.d_vec(vectors[a]))
        if v:
            diff[a] = v
    name = name or P.name
    if not P.is_bialgebra:
        return AlgebraPresentation(name, F, labels, degrees, unit, mult, diff)
    comult = {}
    for a in range(n):
        out: dict = {}
        for (i, j), c in P.delta(vectors[a]).items():
            for k in range(n):
                if Tinv[k][i] == 0:
                    continue
                for l in range(n):
                    if Tinv[l][j] != 0:
                        add_into(out, (k, l), c * Tinv[k][i] * Tinv[l][j], F)
        if out:
            comult[a] = out
    counit = [P.eps(v) for v in vectors]
    return BialgebraPresentation(name, F, labels, degrees, unit, mult, comult, counit, diff)


def dual_bialgebra(H: BialgebraPresentation, validate: bool = True) -> BialgebraPresentation:
    """H* with product dual to Delta, coproduct dual to the product.

    Presented on the basis {eps} U {b^* : b != 1_H} so that the unit of H*
    (the counit of H) is a basis element.
    """
    if validate:
        rep = check_axioms(H)
        if not rep.passed:
            raise MalformedPresentation(f"{H.name} fails its axioms: {rep.failures()[0].line()}")
    F = H.field
    n = H.dim
    deg = H.degrees
    mult: dict = {}
    for e in range(n):
        for (b, c), x in H.delta_basis(e).items():
            s = -1 if deg[b] * deg[c] % 2 else 1
            mult.setdefault((b, c), {})
            add_into(mult[(b, c)], e, s * x, F)
    comult: dict = {}
    for (a, b), vec in H.mult.items():
        s = -1 if deg[a] * deg[b] % 2 else 1
        for e, x in vec.items():
            comult.setdefault(e, {})
            add_into(comult[e], (a, b), s * x, F)
    diff: dict = {}
    for e, vec in H.differential.items():
        for k, x in vec.items():
            s = -1 if (-deg[k]) % 2 == 0 else 1
            diff.setdefault(k, {})
            add_into(diff[k], e, s * x, F)
    counit = [1 if b == H.unit else 0 for b in range(n)]
    labels_raw = [f"{b}^*" for b in H.basis]
    dual_raw = BialgebraPresentation(
        f"{H.name}^*", F, labels_raw, [-d for d in deg], 0 if n else 0,
        {k: v for k, v in mult.items() if v}, {k: v for k, v in comult.items() if v}, counit,
        {k: v for k, v in diff.items() if v},
    )
    eps_vec = {b: H.counit[b] for b in range(n) if H.counit[b] != 0}
    vectors = []
    labels = []
    for b in range(n):
        if b == H.unit:
            vectors.append(eps_vec)
            labels.append("eps")
        else:
            vectors.append({b: 1})
            labels.append(f"{H.basis[b]}^*")
    out = change_basis(dual_raw, vectors, labels, H.unit, name=f"{H.name}^*")
    return out  # type: ignore[return-value]


def bidual_identification(H: BialgebraPresentation) -> tuple[BialgebraPresentation, MorphismMatrix]:
    """(H**, the canonical map H -> H** given by b -> evaluation at b)."""
    D = dual_bialgebra(H)
    DD = dual_bialgebra(D)
    # H** basis: eps_{H*} = ev_{1_H}, and (phi)^* for the non-unit basis phi of H*.
    # ev_b(phi) = phi(b); expand ev_b in the dual basis of H*, then re-express.
    n = H.dim
    F = H.field
    # coordinates of ev_b in the raw dual basis {phi^*} of H*'s basis
    images = {}
    ddvec_raw = []
    for b in range(n):
        raw = {}
        for k in range(n):
            # k-th basis element of H*: eps if k == H.unit else b_k^*
            val = H.counit[b] if k == D.unit else (1 if k == b else 0)
            if val != 0:
                raw[k] = val
        ddvec_raw.append(raw)
    # DD basis vectors in raw coordinates: DD.unit <-> eps_{H*} = sum_k eps_{H*}(phi_k) phi_k^*
    basis_raw = []
    for k in range(n):
        if k == DD.unit:
            basis_raw.append({j: D.counit[j] for j in range(n) if D.counit[j] != 0})
        else:
            basis_raw.append({k: 1})
    T = [[basis_raw[k].get(i, 0) for k in range(n)] for i in range(n)]
    Tinv = _inverse(T, F)
    for b in range(n):
        out: dict = {}
        for i, c in ddvec_raw[b].items():
            for k in range(n):
                if Tinv[k][i] != 0:
                    add_into(out, k, c * Tinv[k][i], F)
        images[b] = out
    return DD, MorphismMatrix(H, DD, images)


def transport(f: MorphismMatrix) -> AlgebraPresentation:
    """Structure constants of f.target pulled back along an isomorphism f.

    Returns a presentation on the *source* labels; equal constants to the
    source iff f is an isomorphism of the given structures.
    """
    S, T = f.source, f.target
    vectors = [f({i: 1}) for i in range(S.dim)]
    return change_basis(T, vectors, S.basis, S.unit, name=T.name)


def is_isomorphism(f: MorphismMatrix) -> bool:
    if f.source.dim != f.target.dim:
        return False
    try:
        _inverse(f.matrix(), f.source.field)
    except MalformedPresentation:
        return False
    return check_bialgebra_morphism(f).passed


def require_bialgebra_morphism(f: MorphismMatrix) -> AxiomReport:
    rep = check_bialgebra_morphism(f)
    if not rep.passed:
        raise NotABialgebraMorphism(rep.failures()[0].line(), rep)
    return rep


__all__ = [
    "AxiomReport", "AxiomResult", "AlgebraPresentation", "BialgebraPresentation",
    "CounitKernel", "MorphismMatrix", "check_axioms", "counit_kernel",
    "check_bialgebra_morphism", "dual_bialgebra", "bidual_identification",
    "change_basis", "transport", "is_isomorphism", "require_bialgebra_morphism", "QQ",
]
