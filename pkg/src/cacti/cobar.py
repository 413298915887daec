"""The cobar construction Omega(H) = (T V, d_i + d_e) on V = Ker(eps).

Words are tuples of V indices.  A letter v has internal degree |v| and total
degree |v| + 1.  The differential acts on letters by d_i v = pi(d_H v) and
d_e v = sum (-1)^{|v'|} v' | v'' over the reduced coproduct, and extends to
words as a derivation of total degree +1.
"""

from __future__ import annotations

import itertools
import re
from typing import Mapping, NamedTuple

from ._sparse import add_into
from .algebra import AxiomReport, BialgebraPresentation, CounitKernel, counit_kernel
from .errors import NonHomogeneous, NotGroupLike, ParentMismatch, ParseError
from .scalar import FieldSpec, Scalar

Word = tuple


class Bidegree(NamedTuple):
    internal: int
    external: int

    @property
    def total(self) -> int:
        return self.internal + self.external

    def __add__(self, other):  # type: ignore[override]
        return Bidegree(self.internal + other[0], self.external + other[1])

    def __str__(self):
        return f"({self.internal},{self.external})"


def word_bidegree(K: CounitKernel, word: Word) -> Bidegree:
    return Bidegree(sum(K.degrees[v] for v in word), len(word))


def word_total(K: CounitKernel, word: Word) -> int:
    return sum(K.degrees[v] for v in word) + len(word)


def basis_words(K: CounitKernel, external: int, internal: int | None = None) -> list[Word]:
    """Words of the given length in lexicographic order, optionally of fixed internal degree."""
    words = itertools.product(range(K.dim), repeat=external)
    if internal is None:
        return list(words)
    return [w for w in words if sum(K.degrees[v] for v in w) == internal]


class CobarElement:
    """Finite linear combination of words in Omega(H)."""

    __slots__ = ("parent", "terms")

    def __init__(self, parent: CounitKernel, terms: Mapping | None = None):
        self.parent = parent
        F = parent.field
        clean = {}
        for w, c in (terms or {}).items():
            c = F.norm(F.coerce(c))
            if c != 0:
                clean[tuple(w)] = c
        self.terms = clean

    @property
    def field(self) -> FieldSpec:
        return self.parent.field

    @classmethod
    def _raw(cls, parent: CounitKernel, terms: dict) -> "CobarElement":
        obj = cls.__new__(cls)
        obj.parent = parent
        obj.terms = terms
        return obj

    def _check(self, other: "CobarElement") -> None:
        if not isinstance(other, CobarElement) or other.parent is not self.parent:
            raise ParentMismatch("cobar elements from different constructions")

    def __add__(self, other):
        self._check(other)
        F = self.field
        out = dict(self.terms)
        for w, c in other.terms.items():
            add_into(out, w, c, F)
        return CobarElement._raw(self.parent, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        F = self.field
        return CobarElement._raw(self.parent, {w: F.norm(-c) for w, c in self.terms.items()})

    def scale(self, c) -> "CobarElement":
        F = self.field
        c = F.coerce(c)
        if c == 0:
            return CobarElement._raw(self.parent, {})
        return CobarElement._raw(self.parent, {w: F.norm(c * x) for w, x in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Scalar)):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, CobarElement):
            return NotImplemented
        return self.parent is other.parent and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def bidegrees(self) -> set[Bidegree]:
        return {word_bidegree(self.parent, w) for w in self.terms}

    def bidegree(self) -> Bidegree | None:
        """Bidegree of a homogeneous element (None for zero)."""
        degs = self.bidegrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise NonHomogeneous(f"element spans bidegrees {sorted(degs)}")
        return degs.pop()

    def total_degree(self) -> int | None:
        """Total degree of an element homogeneous in total degree (None for zero)."""
        degs = {word_total(self.parent, w) for w in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise NonHomogeneous(f"element spans total degrees {sorted(degs)}")
        return degs.pop()

    def homogeneous_parts(self) -> dict[Bidegree, "CobarElement"]:
        parts: dict = {}
        for w, c in self.terms.items():
            parts.setdefault(word_bidegree(self.parent, w), {})[w] = c
        return {b: CobarElement._raw(self.parent, t) for b, t in sorted(parts.items())}

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        F = self.field
        lab = self.parent.labels
        return " + ".join(
            f"{F.fmt(self.terms[w])} * {'|'.join(lab[v] for v in w) or '[]'}" for w in sorted(self.terms)
        )

    __str__ = to_text

    def __repr__(self):
        return f"CobarElement({self.to_text()})"


def zero(K: CounitKernel) -> CobarElement:
    return CobarElement._raw(K, {})


def word(K: CounitKernel, *letters, coeff=1) -> CobarElement:
    """``word(K, "xg", "x")`` is the element xg|x."""
    idx = tuple(K.index(v) if isinstance(v, str) else int(v) for v in letters)
    if not idx:
        raise ParseError("cobar words have length at least 1")
    return CobarElement(K, {idx: coeff})


def from_vector(K: CounitKernel, vec: Mapping) -> CobarElement:
    """External-degree-1 element from a V vector ``{v: coeff}``."""
    return CobarElement._raw(K, {(v,): c for v, c in vec.items() if c != 0})


_TERM_RE = re.compile(r"^\s*(-?\s*\d+(?:/\d+)?)\s*\*\s*(\S+)\s*$")


def parse_element(K: CounitKernel, text: str) -> CobarElement:
    """Inverse of :meth:`CobarElement.to_text`; ``-`` between terms is accepted."""
    text = text.strip()
    if text == "0":
        return zero(K)
    text = re.sub(r"\s-\s", " + -", text)
    out = zero(K)
    for chunk in text.split(" + "):
        m = _TERM_RE.match(chunk)
        if m:
            coeff, body = m.group(1).replace(" ", ""), m.group(2)
        else:
            coeff, body = "1", chunk.strip()
        try:
            letters = [] if body.strip() == "[]" else [K.index(s) for s in body.split("|")]
        except ValueError:
            raise ParseError(f"unknown letter in {body!r}") from None
        out = out + CobarElement(K, {tuple(letters): K.field.coerce(coeff)})
    return out


# ---------------------------------------------------------------------------
# differential
# ---------------------------------------------------------------------------

def reduced_coproduct(K: CounitKernel, v: int | str) -> CobarElement:
    v = K.index(v) if isinstance(v, str) else v
    return CobarElement._raw(K, dict(K.reduced_coproduct(v)))


def _letter_de(K: CounitKernel, v: int) -> dict:
    F = K.field
    out: dict = {}
    for (a, b), c in K.reduced_coproduct(v).items():
        add_into(out, (a, b), -c if K.degrees[a] % 2 else c, F)
    return out


def _letter_di(K: CounitKernel, v: int) -> dict:
    return {(k,): c for k, c in K.internal_differential(v).items()}


class _LetterCache:
    def __init__(self, K: CounitKernel):
        self.di = [_letter_di(K, v) for v in range(K.dim)]
        self.de = [_letter_de(K, v) for v in range(K.dim)]


def _cache(K: CounitKernel) -> _LetterCache:
    got = getattr(K, "_cobar_cache", None)
    if got is None:
        got = _LetterCache(K)
        K._cobar_cache = got
    return got


def d_word(K: CounitKernel, w: Word, internal: bool = True, external: bool = True) -> dict:
    """d applied to a single word, as ``{word: coeff}``."""
    F = K.field
    cache = _cache(K)
    out: dict = {}
    prefix = 0
    for i, v in enumerate(w):
        sign = -1 if prefix % 2 else 1
        head, tail = w[:i], w[i + 1:]
        if internal:
            for piece, c in cache.di[v].items():
                add_into(out, head + piece + tail, sign * c, F)
        if external:
            for piece, c in cache.de[v].items():
                add_into(out, head + piece + tail, sign * c, F)
        prefix += K.degrees[v] + 1
    return out


def _apply_d(omega: CobarElement, internal: bool, external: bool) -> CobarElement:
    K = omega.parent
    F = K.field
    out: dict = {}
    for w, c in omega.terms.items():
        for w2, x in d_word(K, w, internal, external).items():
            add_into(out, w2, c * x, F)
    return CobarElement._raw(K, out)


def differential(omega: CobarElement) -> CobarElement:
    return _apply_d(omega, True, True)


def d_internal(omega: CobarElement) -> CobarElement:
    return _apply_d(omega, True, False)


def d_external(omega: CobarElement) -> CobarElement:
    return _apply_d(omega, False, True)


def check_d_squared(K: CounitKernel, max_ext: int) -> AxiomReport:
    """d^2 = 0 on every basis word of external degree <= max_ext."""
    if max_ext < 1:
        raise ValueError("max_ext must be at least 1")
    rep = AxiomReport(f"d^2 = 0 on Omega({K.parent.name}) up to external degree {max_ext}")
    lab = K.labels
    for n in range(1, max_ext + 1):
        checked = 0
        witness = None
        for w in basis_words(K, n):
            checked += 1
            dd = differential(differential(CobarElement._raw(K, {w: 1})))
            if dd and witness is None:
                witness = f"{'|'.join(lab[v] for v in w)} -> {dd.to_text()}"
                break
        rep.add(f"d_squared[ext={n}]", witness is None, checked, witness)
        if witness is not None:
            break
    return rep


def u_of_grouplike(K: CounitKernel, g: int | str) -> CobarElement:
    """u_g = g - 1_H as an element of V (zero for g = 1_H)."""
    H = K.parent
    gi = H.index(g) if isinstance(g, str) else int(g)
    if H.delta_basis(gi) != {(gi, gi): 1} or H.counit[gi] != 1:
        raise NotGroupLike(f"{H.basis[gi]} is not group-like")
    if gi == H.unit:
        return zero(K)
    vec = K.project({gi: 1, H.unit: H.field.norm(-1)})
    return from_vector(K, vec)


def cobar(H: BialgebraPresentation) -> CounitKernel:
    """The counit kernel carrying Omega(H); kept as an alias for readability."""
    return counit_kernel(H)


__all__ = [
    "Bidegree", "CobarElement", "basis_words", "word", "zero", "from_vector", "parse_element",
    "reduced_coproduct", "differential", "d_internal", "d_external", "d_word",
    "check_d_squared", "u_of_grouplike", "cobar", "word_bidegree", "word_total",
]
