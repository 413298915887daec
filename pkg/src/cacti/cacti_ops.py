"""Cacti operations on Omega(H): cup, braces, B_m, the pre-Lie product and bracket.

Conventions (all for H concentrated in internal degree 0, so every letter has
total degree 1 and a word of length n has shifted degree n - 1):

* ``cup(a, b)`` is concatenation.
* ``braces(x, ys)`` is x{y_1, ..., y_k}: each y_j is inserted at a letter
  x_i (increasing positions) which is replaced by the diagonal action
  x_i * y_j = sum pi(x_i^(1) y_1) | ... | pi(x_i^(m) y_m) over the iterated
  coproduct of x_i in H.
* ``brace(m, x, ys)`` is B_m(x, ys) = (-1)^{|x|} x{ys} with |x| the total degree.
* ``star(a, b)`` is a{b}; on two letters it is pi(ab), the product of H.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from ._sparse import add_into
from .algebra import (AxiomReport, BialgebraPresentation, CounitKernel, change_basis,
                      check_axioms)
from .cobar import CobarElement, basis_words, differential, zero
from .errors import ExtractionFailure, ParentMismatch, UnsupportedGrading
from .scalar import FieldSpec


def _require_degree_zero(K: CounitKernel) -> None:
    if any(K.degrees):
        raise UnsupportedGrading(
            "brace operations on Omega(H) are implemented for H concentrated in internal degree 0"
        )


def _same_parent(*elems: CobarElement) -> CounitKernel:
    K = elems[0].parent
    for e in elems[1:]:
        if e.parent is not K:
            raise ParentMismatch("cobar elements from different constructions")
    return K


def shifted_degree(a: CobarElement) -> int:
    t = a.total_degree()
    if t is None:
        return 0
    return t - 1


# ---------------------------------------------------------------------------
# word-level kernels
# ---------------------------------------------------------------------------

def _h_on_word(K: CounitKernel, h: int, y: tuple) -> dict:
    """h * y for an H basis element h: sum over Delta^(m) h of pi(h^(l) y_l) letterwise."""
    cache = K.__dict__.setdefault("_h_on_word", {})
    key = (h, y)
    got = cache.get(key)
    if got is not None:
        return got
    F = K.field
    H = K.parent
    out: dict = {}
    for hs, c in H.iterated_coproduct(h, len(y)).items():
        partial = {(): c}
        for b, letter in zip(hs, y):
            vec = K.left_action(b, letter)
            if not vec:
                partial = {}
                break
            nxt: dict = {}
            for w, x in partial.items():
                for v, e in vec.items():
                    add_into(nxt, w + (v,), x * e, F)
            partial = nxt
        for w, x in partial.items():
            add_into(out, w, x, F)
    cache[key] = out
    return out


def _letter_on_word(K: CounitKernel, v: int, y: tuple) -> dict:
    """x * y for a V letter x (lifted to H as b - eps(b)1)."""
    cache = K.__dict__.setdefault("_letter_on_word", {})
    key = (v, y)
    got = cache.get(key)
    if got is not None:
        return got
    F = K.field
    out: dict = {}
    for h, c in K.include({v: 1}).items():
        for w, x in _h_on_word(K, h, y).items():
            add_into(out, w, c * x, F)
    cache[key] = out
    return out


def _brace_words(K: CounitKernel, x: tuple, ys: Sequence[tuple]) -> dict:
    k = len(ys)
    n = len(x)
    if k == 0:
        return {x: 1}
    if k > n:
        return {}
    F = K.field
    ms = [len(y) for y in ys]
    N = n + sum(m - 1 for m in ms)
    base = n * (n - 1) // 2 + sum(m * (m - 1) // 2 for m in ms) + N * (N - 1) // 2
    out: dict = {}
    for pos in itertools.combinations(range(n), k):
        expo = base
        before = 0
        for j, i in enumerate(pos):
            p = (i - j) + before
            expo += (ms[j] - 1) * p
            before += ms[j]
        sign = -1 if expo % 2 else 1
        blocks = [_letter_on_word(K, x[i], ys[j]) for j, i in enumerate(pos)]
        if any(not b for b in blocks):
            continue
        for combo in itertools.product(*(b.items() for b in blocks)):
            pieces = []
            last = 0
            coeff = sign
            for j, i in enumerate(pos):
                pieces.append(x[last:i])
                pieces.append(combo[j][0])
                coeff *= combo[j][1]
                last = i + 1
            pieces.append(x[last:])
            add_into(out, sum(pieces, ()), coeff, F)
    return out


# ---------------------------------------------------------------------------
# element-level operations
# ---------------------------------------------------------------------------

def cup(a: CobarElement, b: CobarElement) -> CobarElement:
    K = _same_parent(a, b)
    F = K.field
    out: dict = {}
    for u, c in a.terms.items():
        for w, e in b.terms.items():
            add_into(out, u + w, c * e, F)
    return CobarElement._raw(K, out)


def braces(x: CobarElement, ys: Sequence[CobarElement]) -> CobarElement:
    """x{y_1, ..., y_k}; zero when k exceeds the external degree of a word of x."""
    K = _same_parent(x, *ys)
    _require_degree_zero(K)
    F = K.field
    out: dict = {}
    if not ys:
        return x
    for w, c in x.terms.items():
        if len(ys) > len(w):
            continue
        for combo in itertools.product(*(y.terms.items() for y in ys)):
            coeff = c
            for _, e in combo:
                coeff = coeff * e
            for r, s in _brace_words(K, w, [t for t, _ in combo]).items():
                add_into(out, r, coeff * s, F)
    return CobarElement._raw(K, out)


def brace(m: int, x: CobarElement, ys: Sequence[CobarElement]) -> CobarElement:
    """B_m(x, y_1..y_{m-1}) = (-1)^{|x|} x{y_1..y_{m-1}}."""
    if m < 2 or len(ys) != m - 1:
        raise ValueError(f"B_{m} takes exactly {m - 1} arguments after x")
    t = x.total_degree()
    r = braces(x, ys)
    return -r if t is not None and t % 2 else r


def star(a: CobarElement, b: CobarElement) -> CobarElement:
    """a * b = (-1)^{|a|} B_2(a, b) = a{b}."""
    return braces(a, [b])


def gbracket(a: CobarElement, b: CobarElement) -> CobarElement:
    """[a, b] = a*b - (-1)^{(|a|-1)(|b|-1)} b*a."""
    sa, sb = shifted_degree(a), shifted_degree(b)
    ab, ba = star(a, b), star(b, a)
    return ab + ba if (sa * sb) % 2 else ab - ba


def h_action(K: CounitKernel, h: Mapping, y: CobarElement) -> CobarElement:
    """h * y for an arbitrary H vector h (1_H acts as the identity)."""
    F = K.field
    out: dict = {}
    for hb, c in h.items():
        for w, e in y.terms.items():
            for r, s in _h_on_word(K, hb, w).items():
                add_into(out, r, c * e * s, F)
    return CobarElement._raw(K, out)


# ---------------------------------------------------------------------------
# extraction of the bialgebra (the converse direction)
# ---------------------------------------------------------------------------

@dataclass
class CobarCactiData:
    """A Cacti structure on T(V) with cup = concatenation, given on letters.

    ``star`` maps a pair of letters to a V vector (the B_2 product in star
    form), ``d`` maps a letter to ``{word: coeff}`` with words of length 1 or 2.
    """

    name: str
    field: FieldSpec
    labels: tuple
    degrees: tuple
    star: dict
    d: dict

    def d_word(self, w: tuple) -> dict:
        F = self.field
        out: dict = {}
        prefix = 0
        for i, v in enumerate(w):
            sign = -1 if prefix % 2 else 1
            for piece, c in self.d.get(v, {}).items():
                add_into(out, w[:i] + piece + w[i + 1:], sign * c, F)
            prefix += self.degrees[v] + 1
        return out


def cacti_data(K: CounitKernel, name: str | None = None) -> CobarCactiData:
    """Letter-level Cacti data of Omega(H), computed through the operations."""
    _require_degree_zero(K)
    n = K.dim
    letters = [CobarElement._raw(K, {(v,): 1}) for v in range(n)]
    st = {}
    for i in range(n):
        for j in range(n):
            e = star(letters[i], letters[j])
            if e:
                st[(i, j)] = {w[0]: c for w, c in e.terms.items()}
    d = {}
    for i in range(n):
        e = differential(letters[i])
        if e:
            d[i] = dict(e.terms)
    return CobarCactiData(name or K.parent.name, K.field, K.labels, K.degrees, st, d)


def check_data_d_squared(data: CobarCactiData, max_ext: int = 3) -> AxiomReport:
    rep = AxiomReport(f"d^2 = 0 on the letter data of {data.name}")
    F = data.field
    n = len(data.labels)
    for ext in range(1, max_ext + 1):
        checked, witness = 0, None
        for w in itertools.product(range(n), repeat=ext):
            checked += 1
            dd: dict = {}
            for w2, c in data.d_word(w).items():
                for w3, e in data.d_word(w2).items():
                    add_into(dd, w3, c * e, F)
            if dd:
                lab = data.labels
                witness = "|".join(lab[v] for v in w) + " -> " + " + ".join(
                    f"{F.fmt(c)} * {'|'.join(lab[v] for v in u)}" for u, c in sorted(dd.items()))
                break
        rep.add(f"d_squared[ext={ext}]", witness is None, checked, witness)
        if witness is not None:
            break
    return rep


def extract_bialgebra(data: CobarCactiData | CounitKernel, check_d: int = 3) -> BialgebraPresentation:
    """H = V + k1 with product from B_2 on letters, Delta from d_e, d_H from d_i."""
    if isinstance(data, CounitKernel):
        data = cacti_data(data)
    F = data.field
    if check_d:
        rep = check_data_d_squared(data, check_d)
        if not rep.passed:
            raise ExtractionFailure(f"d^2 != 0: {rep.failures()[0].witness}", rep)
    n = len(data.labels)
    # H basis: 0 = 1_H, v + 1 = letter v
    labels = ["1"] + list(data.labels)
    degrees = [0] + list(data.degrees)
    mult = {(0, b): {b: 1} for b in range(n + 1)}
    mult.update({(b, 0): {b: 1} for b in range(1, n + 1)})
    for (i, j), vec in data.star.items():
        mult[(i + 1, j + 1)] = {k + 1: c for k, c in vec.items()}
    comult = {0: {(0, 0): 1}}
    diff = {}
    for v in range(n):
        terms: dict = {(v + 1, 0): 1, (0, v + 1): 1}
        internal: dict = {}
        for w, c in data.d.get(v, {}).items():
            if len(w) == 2:
                c = -c if data.degrees[w[0]] % 2 else c
                add_into(terms, (w[0] + 1, w[1] + 1), c, F)
            elif len(w) == 1:
                add_into(internal, w[0] + 1, c, F)
            else:
                raise ExtractionFailure(f"d of letter {data.labels[v]} has a word of length {len(w)}")
        comult[v + 1] = terms
        if internal:
            diff[v + 1] = internal
    counit = [1] + [0] * n
    H = BialgebraPresentation(f"extract({data.name})", F, labels, degrees, 0, mult, comult, counit, diff)
    rep = check_axioms(H)
    if not rep.passed:
        raise ExtractionFailure(f"extracted structure fails {rep.failures()[0].line()}", rep)
    return H


def extracted_in_original_basis(H_ext: BialgebraPresentation, H: BialgebraPresentation,
                                K: CounitKernel | None = None) -> BialgebraPresentation:
    """Rewrite an extracted bialgebra on H's basis via b = v_b + eps(b) 1."""
    K = K or CounitKernel(H)
    vectors = []
    for b in range(H.dim):
        if b == H.unit:
            vectors.append({0: 1})
        else:
            vec = {K._vpos[b] + 1: 1}
            if H.counit[b] != 0:
                vec[0] = H.counit[b]
            vectors.append(vec)
    return change_basis(H_ext, vectors, H.basis, H.unit, name=H.name)


def round_trip(H: BialgebraPresentation) -> tuple[bool, BialgebraPresentation]:
    """(constants identical?, reconstructed presentation) for Omega(H) -> H."""
    K = CounitKernel(H)
    back = extracted_in_original_basis(extract_bialgebra(K), H, K)
    return back.same_constants(H), back


# ---------------------------------------------------------------------------
# identity checking
# ---------------------------------------------------------------------------

class CobarModel:
    """Omega(H) as a model for :mod:`cacti.identities`."""

    def __init__(self, K: CounitKernel, max_ext: int = 3, cap: int = 6):
        _require_degree_zero(K)
        self.K = K
        self.name = f"Omega({K.parent.name}) over {K.field}"
        self.max_ext = max_ext
        self.cap = max(cap, max_ext + 1)
        self._letters = [CobarElement._raw(K, {(v,): 1}) for v in range(K.dim)]

    def zero(self):
        return zero(self.K)

    def sdeg(self, a):
        return shifted_degree(a)

    def ext(self, a):
        b = a.bidegree()
        return 0 if b is None else b.external

    cup = staticmethod(cup)
    braces = staticmethod(braces)
    d = staticmethod(differential)

    def _coeff(self, rng):
        return rng.choice((-3, -2, -1, 1, 2, 3))

    def sample(self, rng, ext: int):
        K = self.K
        F = K.field
        terms: dict = {}
        for _ in range(rng.randint(1, 3)):
            w = tuple(rng.randrange(K.dim) for _ in range(ext))
            add_into(terms, w, self._coeff(rng), F)
        return CobarElement._raw(K, terms)

    def diag_sample(self, rng):
        K = self.K
        F = K.field
        H = K.parent
        x = self.sample(rng, 1)
        hvec: dict = {}
        for (v,), c in x.terms.items():
            for h, e in K.include({v: 1}).items():
                add_into(hvec, h, c * e, F)
        terms = []
        for (h1, h2), c in sorted(H.delta(hvec).items()):
            terms.append((c, h1, h2))
        return x, terms

    def act(self, h, y):
        return h_action(self.K, {h: 1}, y)

    def basis_elements(self, ext: int):
        for w in basis_words(self.K, ext):
            yield CobarElement._raw(self.K, {w: 1})

    def render(self, a) -> str:
        return a.to_text()


def check_identity(identity: str, K: CounitKernel, samples: int = 100, seed: int = 0,
                   max_ext: int = 3) -> AxiomReport:
    """Evaluate a Cacti relation on Omega(H) over seeded random homogeneous inputs."""
    from .identities import run_identity
    return run_identity(identity, CobarModel(K, max_ext), samples, seed)


def check_all_identities(K: CounitKernel, samples: int = 100, seed: int = 0,
                         max_ext: int = 3) -> AxiomReport:
    from .identities import run_suite
    return run_suite(CobarModel(K, max_ext), samples, seed)


__all__ = [
    "CobarModel", "check_identity", "check_all_identities",
    "cup", "braces", "brace", "star", "gbracket", "h_action", "shifted_degree",
    "CobarCactiData", "cacti_data", "extract_bialgebra", "extracted_in_original_basis",
    "round_trip", "check_data_d_squared",
]
