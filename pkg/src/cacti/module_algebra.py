"""H-module algebras and the induced Cacti morphism Omega(H) -> C*(A).

An action rho: H (x) A -> A induces on words

    x_1 | ... | x_n  ->  (a_1, ..., a_n) -> rho_{x_1}(a_1) ... rho_{x_n}(a_n)

where rho_x for a letter x of V = Ker(eps) is rho of x seen inside H.  The
map commutes with the external differentials exactly when
h(ab) = h_(1)(a) h_(2)(b), and with the internal ones exactly when the d.g.
condition holds.
"""

from __future__ import annotations

import itertools
import random
from typing import Mapping

from ._sparse import add_into
from .algebra import (AlgebraPresentation, AxiomReport, BialgebraPresentation, CounitKernel,
                      MorphismMatrix, _Recorder, _vec_eq, check_axioms, counit_kernel,
                      dual_bialgebra, require_bialgebra_morphism)
from .cacti_ops import brace, cup, star
from .cobar import CobarElement, d_external, d_internal, differential
from .errors import MalformedPresentation, ParentMismatch
from .hochschild import (Cochain, hbrace, hcup, hdifferential, hochschild, hstar)


class ActionMap:
    """rho: H (x) A -> A given on basis pairs as ``{(h, a): A vector}``.

    Keys may be labels or indices.  If no entry has h = 1_H the unit is
    taken to act as the identity.
    """

    def __init__(self, H: BialgebraPresentation, A: AlgebraPresentation, rho: Mapping,
                 name: str | None = None):
        if H.field != A.field:
            raise MalformedPresentation("bialgebra and algebra over different fields")
        self.H, self.A = H, A
        self.field = H.field
        self.name = name or f"{H.name} on {A.name}"
        table: dict = {}
        for (h, a), vec in rho.items():
            key = (H._resolve(h), A._resolve(a))
            v = A._clean_vec(vec)
            if v:
                table[key] = v
        if not any(h == H.unit for h, _ in rho_keys(H, rho)):
            for a in range(A.dim):
                table[(H.unit, a)] = {a: 1}
        self.rho = table
        self._ops: dict = {}

    def operator(self, h: int) -> dict:
        """rho_h as ``{a: image}`` for an H basis index."""
        got = self._ops.get(h)
        if got is None:
            got = {a: v for (hh, a), v in self.rho.items() if hh == h}
            self._ops[h] = got
        return got

    def operator_of(self, hvec: Mapping) -> dict:
        """rho_h for an H vector, as ``{a: image}``."""
        F = self.field
        out: dict = {}
        for h, c in hvec.items():
            for a, v in self.operator(h).items():
                img = out.setdefault(a, {})
                for k, x in v.items():
                    add_into(img, k, c * x, F)
        return {a: v for a, v in out.items() if v}

    def act(self, hvec: Mapping, avec: Mapping) -> dict:
        F = self.field
        out: dict = {}
        for h, c in hvec.items():
            for a, e in avec.items():
                for k, x in self.rho.get((h, a), {}).items():
                    add_into(out, k, c * e * x, F)
        return out

    def __repr__(self):
        return f"ActionMap({self.name}, {self.field})"


def rho_keys(H: BialgebraPresentation, rho: Mapping):
    for h, a in rho:
        yield H._resolve(h), a


def trivial_action(H: BialgebraPresentation, A: AlgebraPresentation) -> ActionMap:
    """h(a) = eps(h) a."""
    rho = {(h, a): {a: H.counit[h]} for h in range(H.dim) for a in range(A.dim) if H.counit[h]}
    return ActionMap(H, A, rho, name=f"trivial {H.name} on {A.name}")


# ---------------------------------------------------------------------------
# axioms
# ---------------------------------------------------------------------------

def check_module_algebra(act: ActionMap, validate: bool = True) -> AxiomReport:
    """Exhaustive check of degree, module, unit, h(ab) and d.g. axioms on basis tuples."""
    H, A = act.H, act.A
    F = act.field
    if validate:
        for P in (H, A):
            rep = check_axioms(P)
            if not rep.passed:
                raise MalformedPresentation(f"{P.name} fails its axioms: {rep.failures()[0].line()}")
    hl, al = H.basis, A.basis
    hs, as_ = range(H.dim), range(A.dim)
    rep = AxiomReport(f"module algebra {act.name}")

    r = _Recorder(rep, "degree")
    for (h, a), v in sorted(act.rho.items()):
        for k in v:
            r.check(A.degrees[k] == H.degrees[h] + A.degrees[a], f"({hl[h]}, {al[a]})")
    r.close()

    r = _Recorder(rep, "module")
    for h in hs:
        for k in hs:
            hk = H.mul_basis(h, k)
            for a in as_:
                lhs = act.act(hk, {a: 1})
                rhs = act.act({h: 1}, act.act({k: 1}, {a: 1}))
                r.check(_vec_eq(lhs, rhs), f"({hl[h]}, {hl[k]}, {al[a]})")
    r.close()

    r = _Recorder(rep, "unit")
    for a in as_:
        r.check(_vec_eq(act.act({H.unit: 1}, {a: 1}), {a: 1}), f"({hl[H.unit]}, {al[a]})")
    for h in hs:
        want = {A.unit: H.counit[h]} if H.counit[h] else {}
        r.check(_vec_eq(act.act({h: 1}, {A.unit: 1}), want), f"({hl[h]}, {al[A.unit]})")
    r.close()

    r = _Recorder(rep, "h(ab)")
    for h in hs:
        split = sorted(H.delta_basis(h).items())
        for a in as_:
            for b in as_:
                lhs = act.act({h: 1}, A.mul_basis(a, b))
                rhs: dict = {}
                for (h1, h2), c in split:
                    s = -c if H.degrees[h2] * A.degrees[a] % 2 else c
                    for k, x in A.mul(act.act({h1: 1}, {a: 1}), act.act({h2: 1}, {b: 1})).items():
                        add_into(rhs, k, s * x, F)
                r.check(_vec_eq(lhs, rhs), f"({hl[h]}, {al[a]}, {al[b]})")
    r.close()

    r = _Recorder(rep, "d.g.")
    if H.has_differential or A.has_differential:
        for h in hs:
            for a in as_:
                lhs = A.d_vec(act.act({h: 1}, {a: 1}))
                rhs = act.act(H.d_vec({h: 1}), {a: 1})
                sign = -1 if H.degrees[h] % 2 else 1
                for k, x in act.act({h: 1}, A.d_vec({a: 1})).items():
                    add_into(rhs, k, sign * x, F)
                r.check(_vec_eq(lhs, rhs), f"({hl[h]}, {al[a]})")
        r.close()
    else:
        r.close("no differentials")
    return rep


# ---------------------------------------------------------------------------
# the induced map
# ---------------------------------------------------------------------------

class InducedMorphism:
    """The word-level map Omega(H) -> C*(A) of an action, with a per-word cache."""

    def __init__(self, act: ActionMap, K: CounitKernel | None = None):
        self.action = act
        self.K = K if K is not None else counit_kernel(act.H)
        if self.K.parent is not act.H and not self.K.parent.same_constants(act.H):
            raise ParentMismatch("cobar construction of a different bialgebra")
        self.C = hochschild(act.A)
        self.cache: dict = {}
        self._letters = [act.operator_of(self.K.include({v: 1})) for v in range(self.K.dim)]

    def letter_operator(self, v: int) -> dict:
        return self._letters[v]

    def word(self, w: tuple) -> Cochain:
        got = self.cache.get(w)
        if got is not None:
            return got
        A = self.action.A
        deg = A.degrees
        ops = [self._letters[v] for v in w]
        vdeg = [self.K.degrees[v] for v in w]

        def value(*ins):
            # Koszul sign for moving rho_{x_j} past a_1..a_{j-1}
            e = 0
            before = 0
            for j, a in enumerate(ins):
                e += vdeg[j] * before
                before += deg[a]
            acc = {A.unit: -1 if e % 2 else 1}
            for op, a in zip(ops, ins):
                acc = A.mul(acc, op.get(a, {}))
                if not acc:
                    break
            return acc

        p = sum(vdeg)
        got = self.C.from_map(len(w), value, p)
        self.cache[w] = got
        return got

    def __call__(self, omega: CobarElement) -> Cochain:
        if omega.parent is not self.K:
            raise ParentMismatch("element of a different cobar construction")
        out = self.C.zero()
        for w, c in sorted(omega.terms.items()):
            out = out + self.word(w).scale(c)
        return out


def induced(act: ActionMap, omega: CobarElement) -> Cochain:
    """phi(omega) for the action's induced morphism (cached on the action)."""
    phi = getattr(act, "_induced", None)
    if phi is None or phi.K is not omega.parent:
        phi = InducedMorphism(act, omega.parent)
        act._induced = phi
    return phi(omega)


def _random_element(K: CounitKernel, rng: random.Random, ext: int) -> CobarElement:
    F = K.field
    terms: dict = {}
    if K.dim == 0:
        return CobarElement._raw(K, terms)
    for _ in range(rng.randint(1, 3)):
        w = tuple(rng.randrange(K.dim) for _ in range(ext))
        add_into(terms, w, rng.choice((-3, -2, -1, 1, 2, 3)), F)
    return CobarElement._raw(K, terms)


def _letters(K: CounitKernel) -> list[CobarElement]:
    return [CobarElement._raw(K, {(v,): 1}) for v in range(K.dim)]


def verify_cacti_morphism(act: ActionMap, max_ext: int = 3, samples: int = 20, seed: int = 0,
                          K: CounitKernel | None = None) -> AxiomReport:
    """Check the induced map is a Cacti morphism.

    ``letters:*`` entries are the hypotheses of the morphism criterion, checked
    exhaustively on letters and letter pairs; the remaining entries compare
    both sides directly on seeded random elements up to external degree
    ``max_ext`` (B_3 included).
    """
    phi = InducedMorphism(act, K)
    K = phi.K
    rep = AxiomReport(f"induced morphism of {act.name} (max_ext={max_ext}, samples={samples}, seed={seed})")
    L = _letters(K)
    lab = K.labels

    rep.add("letters:generate", True, K.dim, None, "Omega(H) is the tensor algebra on V")

    r = _Recorder(rep, "letters:multiplicative")
    for i, x in enumerate(L):
        for j, y in enumerate(L):
            r.check(phi(cup(x, y)) == hcup(phi(x), phi(y)), f"{lab[i]}|{lab[j]}")
    r.close()

    r = _Recorder(rep, "letters:d")
    for i, x in enumerate(L):
        r.check(phi(differential(x)) == hdifferential(phi(x)), lab[i])
    r.close()

    r = _Recorder(rep, "letters:star")
    for i, x in enumerate(L):
        for j, y in enumerate(L):
            r.check(phi(star(x, y)) == hstar(phi(x), phi(y)), f"{lab[i]}*{lab[j]}")
    r.close()

    rng = random.Random(f"{seed}:verify_cacti_morphism")
    checks = {name: _Recorder(rep, name) for name in
              ("chain_map[d_e]", "chain_map[d_i]", "cup", "B_2", "B_3")}
    for _ in range(samples):
        n = rng.randint(1, max_ext)
        w = _random_element(K, rng, n)
        fw = phi(w)
        checks["chain_map[d_e]"].check(phi(d_external(w)) == hdifferential(fw, internal=False),
                                       w.to_text())
        checks["chain_map[d_i]"].check(phi(d_internal(w)) == hdifferential(fw, external=False),
                                       w.to_text())
        a, b = rng.randint(1, max_ext), 0
        b = rng.randint(1, max(1, max_ext - a)) if a < max_ext else 1
        x, y = _random_element(K, rng, a), _random_element(K, rng, b)
        checks["cup"].check(phi(cup(x, y)) == hcup(phi(x), phi(y)), f"{x.to_text()} ; {y.to_text()}")
        checks["B_2"].check(phi(brace(2, x, [y])) == hbrace(2, phi(x), [phi(y)]),
                            f"{x.to_text()} ; {y.to_text()}")
        n = rng.randint(2, max_ext)
        x = _random_element(K, rng, n)
        y, z = _random_element(K, rng, 1), _random_element(K, rng, rng.randint(1, max_ext - n + 1))
        checks["B_3"].check(phi(brace(3, x, [y, z])) == hbrace(3, phi(x), [phi(y), phi(z)]),
                            f"{x.to_text()} ; {y.to_text()} ; {z.to_text()}")
    for r in checks.values():
        r.close()
    return rep


# ---------------------------------------------------------------------------
# actions from duality
# ---------------------------------------------------------------------------

def pairing_action(H: BialgebraPresentation) -> ActionMap:
    """H* acting on H by phi -> h = h_(1) <phi, h_(2)>."""
    D = dual_bialgebra(H)
    F = H.field
    deg = H.degrees

    def pair(k: int, b: int):
        # D basis: the counit at H.unit's slot, b^* elsewhere
        if k == D.unit:
            return H.counit[b]
        return 1 if k == b else 0

    rho: dict = {}
    for k in range(D.dim):
        for b in range(H.dim):
            out: dict = {}
            for (b1, b2), c in H.delta_basis(b).items():
                x = pair(k, b2)
                if x:
                    s = -1 if D.degrees[k] * deg[b1] % 2 else 1
                    add_into(out, b1, s * c * x, F)
            if out:
                rho[(k, b)] = out
    return ActionMap(D, H, rho, name=f"{D.name} on {H.name}")


# ---------------------------------------------------------------------------
# lifting bialgebra morphisms
# ---------------------------------------------------------------------------

class CobarLift:
    """Letter-wise extension Omega(H) -> Omega(H') of a bialgebra morphism."""

    def __init__(self, f: MorphismMatrix, K: CounitKernel | None = None, K2: CounitKernel | None = None):
        self.f = f
        self.K = K if K is not None else counit_kernel(f.source)
        self.K2 = K2 if K2 is not None else counit_kernel(f.target)
        self.letters = [self.K2.project(f(self.K.include({v: 1}))) for v in range(self.K.dim)]

    def __call__(self, omega: CobarElement) -> CobarElement:
        if omega.parent is not self.K:
            raise ParentMismatch("element of a different cobar construction")
        F = self.K.field
        out: dict = {}
        for w, c in omega.terms.items():
            for combo in itertools.product(*(self.letters[v].items() for v in w)):
                coeff = c
                for _, e in combo:
                    coeff = coeff * e
                add_into(out, tuple(k for k, _ in combo), coeff, F)
        return CobarElement._raw(self.K2, out)


def lift_bialgebra_morphism(f: MorphismMatrix, max_ext: int = 3, samples: int = 20,
                            seed: int = 0) -> tuple[CobarLift, AxiomReport]:
    """Extend f to words and check the lift against d, cup and B_2 on samples.

    Raises NotABialgebraMorphism when f fails the bialgebra morphism axioms.
    """
    base = require_bialgebra_morphism(f)
    lift = CobarLift(f)
    rep = AxiomReport(f"lift of {f.source.name} -> {f.target.name} (max_ext={max_ext}, samples={samples}, seed={seed})")
    rep.extend(base, "morphism:")
    K = lift.K
    rng = random.Random(f"{seed}:lift_bialgebra_morphism")
    checks = {name: _Recorder(rep, name) for name in ("chain_map", "cup", "B_2")}
    for _ in range(samples):
        w = _random_element(K, rng, rng.randint(1, max_ext))
        checks["chain_map"].check(lift(differential(w)) == differential(lift(w)), w.to_text())
        a = rng.randint(1, max_ext)
        b = rng.randint(1, max(1, max_ext - a + 1))
        x, y = _random_element(K, rng, a), _random_element(K, rng, b)
        checks["cup"].check(lift(cup(x, y)) == cup(lift(x), lift(y)), f"{x.to_text()} ; {y.to_text()}")
        checks["B_2"].check(lift(brace(2, x, [y])) == brace(2, lift(x), [lift(y)]),
                            f"{x.to_text()} ; {y.to_text()}")
    for r in checks.values():
        r.close()
    return lift, rep


# ---------------------------------------------------------------------------
# standard actions and their single-axiom mutations
# ---------------------------------------------------------------------------

def sweedler_action(field=None, mutation: str | None = None) -> ActionMap:
    """Sweedler's algebra on k[y]/y^2 by g(y) = -y and x = d/dy (a square zero super-derivation).

    ``mutation`` breaks exactly one module-algebra axiom:

    * ``"module"``: xg(y) = +1, so rho_{xg} != rho_x rho_g;
    * ``"unit"``: every h acts through the augmentation, h(a) = eps(h) eps(a) 1;
    * ``"h(ab)"``: the same action on k[y]/y^3 with g(y2) = y2 and x(y2) = 0,
      which violates x(y . y2) = x(y) y2 + g(y) x(y2);
    * ``"d.g."``: g(y) = -y on the d.g. super line (|y| = -1, dy = 1), x acting by 0.
    """
    from .catalog import dg_super_line, sweedler4, trunc_poly
    from .scalar import QQ
    F = field or QQ
    H = sweedler4(F)
    if mutation is None:
        A = trunc_poly(2, F)
        rho = {("g", "1"): {"1": 1}, ("g", "y"): {"y": -1}, ("x", "y"): {"1": 1}, ("xg", "y"): {"1": -1}}
    elif mutation == "module":
        A = trunc_poly(2, F)
        rho = {("g", "1"): {"1": 1}, ("g", "y"): {"y": -1}, ("x", "y"): {"1": 1}, ("xg", "y"): {"1": 1}}
    elif mutation == "unit":
        A = trunc_poly(2, F)
        rho = {(h, "1"): {"1": H.counit[H.index(h)]} for h in H.basis if H.counit[H.index(h)]}
    elif mutation == "h(ab)":
        A = trunc_poly(3, F)
        rho = {("g", "1"): {"1": 1}, ("g", "y"): {"y": -1}, ("g", "y2"): {"y2": 1},
               ("x", "y"): {"1": 1}, ("xg", "y"): {"1": -1}}
    elif mutation == "d.g.":
        A = dg_super_line(F)
        rho = {("g", a): {a: -1 if a == "y" else 1} for a in A.basis}
    else:
        raise ValueError(f"unknown mutation {mutation!r}")
    name = f"{H.name} on {A.name}" + (f" [{mutation} mutation]" if mutation else "")
    return ActionMap(H, A, rho, name=name)


MUTATIONS = ("module", "unit", "h(ab)", "d.g.")


# ---------------------------------------------------------------------------
# action files
# ---------------------------------------------------------------------------

def action_to_dict(act: ActionMap) -> dict:
    from .io import presentation_to_dict
    F = act.field
    hl, al = act.H.basis, act.A.basis
    table = {}
    for (h, a), v in sorted(act.rho.items()):
        table[f"{hl[h]}.{al[a]}"] = {al[k]: F.fmt(x) for k, x in sorted(v.items())}
    return {"bialgebra": presentation_to_dict(act.H), "algebra": presentation_to_dict(act.A),
            "action": table}


def action_from_dict(data: Mapping, base_dir=".", field=None) -> ActionMap:
    """Parse an action file; ``bialgebra``/``algebra`` are inline presentations,
    file paths (relative to ``base_dir``) or ``catalog:<id>`` strings."""
    from pathlib import Path

    from .catalog import example_from_id
    from .errors import ParseError
    from .io import load_presentation, presentation_from_dict

    def load(ref):
        if isinstance(ref, Mapping):
            return presentation_from_dict(ref, field)
        if isinstance(ref, str) and ref.startswith("catalog:"):
            return example_from_id(ref[len("catalog:"):], field)
        if isinstance(ref, str):
            return load_presentation(Path(base_dir) / ref, field)
        raise ParseError(f"cannot load presentation from {ref!r}")

    try:
        H, A = load(data["bialgebra"]), load(data["algebra"])
    except KeyError as exc:
        raise ParseError(f"action file missing {exc.args[0]!r}") from None
    if not isinstance(H, BialgebraPresentation):
        raise ParseError(f"{H.name} is not a bialgebra")
    rho = {}
    for key, vec in data.get("action", {}).items():
        h, sep, a = key.rpartition(".")
        if not sep:
            raise ParseError(f"action key {key!r} is not of the form 'h.a'")
        rho[(h, a)] = {k: H.field.coerce(v) for k, v in vec.items()}
    return ActionMap(H, A, rho)


__all__ = [
    "ActionMap", "InducedMorphism", "CobarLift", "MUTATIONS", "check_module_algebra", "induced",
    "verify_cacti_morphism", "pairing_action", "lift_bialgebra_morphism", "trivial_action",
    "sweedler_action", "action_to_dict", "action_from_dict",
]
