"""Evaluated checks of the Cacti relations on any model of the operations.

A model ("ops") provides homogeneous sampling and the basic operations; the
relations are written once here in shifted degrees ||a|| = |a| - 1.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable, Protocol, Sequence

from .algebra import AxiomReport

IDENTITY_IDS = (
    "brace_relation",
    "distributivity",
    "boundary_of_Bm",
    "preLie",
    "ext1_associativity",
    "diagonal_action",
    "well_graded_vanishing",
    "d_is_derivation",
    "left_distributivity_B2",
)

BOUNDARY_ARITIES = (2, 3, 4)


class CactiModel(Protocol):
    name: str
    cap: int          # largest external degree an intermediate result may reach
    max_ext: int      # largest external degree of a sampled input

    def zero(self): ...
    def sdeg(self, a) -> int: ...
    def ext(self, a) -> int: ...
    def cup(self, a, b): ...
    def braces(self, x, ys): ...
    def d(self, a): ...
    def sample(self, rng: random.Random, ext: int): ...
    def diag_sample(self, rng: random.Random): ...
    def act(self, h, y): ...
    def basis_elements(self, ext: int): ...
    def render(self, a) -> str: ...


def _sgn(e: int) -> int:
    return -1 if e % 2 else 1


def _scaled(a, s: int):
    return a if s == 1 else -a


class _Check:
    def __init__(self, model, name: str):
        self.model, self.name = model, name
        self.checked = 0
        self.witness = None

    def compare(self, lhs, rhs, inputs: Sequence) -> None:
        self.checked += 1
        if self.witness is None and lhs != rhs:
            m = self.model
            args = "; ".join(m.render(a) for a in inputs)
            self.witness = f"inputs [{args}] lhs-rhs = {m.render(lhs - rhs)}"

    def zero(self, value, inputs: Sequence) -> None:
        self.compare(value, self.model.zero(), inputs)

    def close(self, rep: AxiomReport, detail: str = "") -> None:
        rep.add(self.name, self.witness is None, self.checked, self.witness, detail)


def _pick_exts(rng: random.Random, model, count: int, lo: Sequence[int] | None = None,
               hi: int | None = None, fits: Callable[[list[int]], bool] | None = None) -> list[int]:
    hi = hi or model.max_ext
    for _ in range(200):
        exts = [rng.randint((lo[i] if lo else 1), hi) for i in range(count)]
        if fits is None or fits(exts):
            return exts
    return [lo[i] if lo else 1 for i in range(count)]


def _brace_ext(x: int, ys: Sequence[int]) -> int:
    return x + sum(y - 1 for y in ys)


# ---------------------------------------------------------------------------
# individual relations
# ---------------------------------------------------------------------------

def _brace_relation_rhs(model, x, ys, zs):
    """Sum over placements of the z's into gaps and into the y's (Getzler sign)."""
    m = len(ys)
    total = model.zero()
    slots = 2 * m + 1  # even slots are gaps, slot 2j+1 is y_j
    for assign in itertools.combinations_with_replacement(range(slots), len(zs)):
        expo = 0
        for j, y in enumerate(ys):
            before = sum(model.sdeg(z) for z, s in zip(zs, assign) if s < 2 * j + 1)
            expo += model.sdeg(y) * before
        args = []
        for s in range(slots):
            inside = [z for z, t in zip(zs, assign) if t == s]
            if s % 2 == 0:
                args.extend(inside)
            else:
                y = ys[s // 2]
                args.append(model.braces(y, inside) if inside else y)
        total = total + _scaled(model.braces(x, args), _sgn(expo))
    return total


def check_brace_relation(model, rng, samples) -> _Check:
    chk = _Check(model, "brace_relation")
    for _ in range(samples):
        m = rng.randint(1, 2)
        k = rng.randint(1, 2)
        cap = model.cap

        def fits(e):
            x, ys, zs = e[0], e[1:1 + m], e[1 + m:]
            return x >= m and _brace_ext(_brace_ext(x, ys), zs) <= cap

        e = _pick_exts(rng, model, 1 + m + k, hi=min(model.max_ext, 3), fits=fits)
        x = model.sample(rng, e[0])
        ys = [model.sample(rng, t) for t in e[1:1 + m]]
        zs = [model.sample(rng, t) for t in e[1 + m:]]
        lhs = model.braces(model.braces(x, ys), zs)
        rhs = _brace_relation_rhs(model, x, ys, zs)
        chk.compare(lhs, rhs, [x, *ys, *zs])
    return chk


def _distributivity_rhs(model, a, b, cs):
    total = model.zero()
    sb = model.sdeg(b)
    for k in range(len(cs) + 1):
        first, rest = cs[:k], cs[k:]
        sc = sum(model.sdeg(c) for c in first)
        left = model.braces(a, first) if first else a
        right = model.braces(b, rest) if rest else b
        total = total + _scaled(model.cup(left, right), _sgn(sb * sc + sc))
    return total


def check_distributivity(model, rng, samples, name="distributivity", nmax=3) -> _Check:
    chk = _Check(model, name)
    for _ in range(samples):
        n = 1 if nmax == 1 else rng.randint(1, nmax)

        def fits(e):
            return _brace_ext(e[0] + e[1], e[2:]) <= model.cap

        e = _pick_exts(rng, model, 2 + n, hi=min(model.max_ext, 2), fits=fits)
        a, b = model.sample(rng, e[0]), model.sample(rng, e[1])
        cs = [model.sample(rng, t) for t in e[2:]]
        lhs = model.braces(model.cup(a, b), cs)
        chk.compare(lhs, _distributivity_rhs(model, a, b, cs), [a, b, *cs])
    return chk


def _boundary_sides(model, x, ys):
    n = len(ys)
    sx = model.sdeg(x)
    sy = [model.sdeg(y) for y in ys]
    pre = [sum(sy[:i]) for i in range(n + 1)]
    lhs = model.d(model.braces(x, ys)) - model.braces(model.d(x), ys)
    for i in range(n):
        args = list(ys)
        args[i] = model.d(ys[i])
        lhs = lhs - _scaled(model.braces(x, args), _sgn(sx + pre[i]))
    rest_front = model.braces(x, ys[1:]) if n > 1 else x
    rhs = _scaled(model.cup(ys[0], rest_front), _sgn(sx * sy[0] + sy[0]))
    rest_back = model.braces(x, ys[:-1]) if n > 1 else x
    rhs = rhs + _scaled(model.cup(rest_back, ys[-1]), _sgn(sx + pre[n - 1]))
    for i in range(n - 1):
        args = list(ys[:i]) + [model.cup(ys[i], ys[i + 1])] + list(ys[i + 2:])
        rhs = rhs - _scaled(model.braces(x, args), _sgn(sx + pre[i] + sy[i]))
    return lhs, rhs


def check_boundary(model, rng, samples, m: int) -> _Check:
    chk = _Check(model, f"boundary_of_Bm[m={m}]")
    n = m - 1
    for _ in range(samples):
        def fits(e):
            return _brace_ext(e[0], e[1:]) + 1 <= model.cap and e[0] + 1 >= n

        e = _pick_exts(rng, model, 1 + n, lo=[max(1, n - 1)] + [1] * n,
                       hi=min(model.max_ext, max(3, n)), fits=fits)
        x = model.sample(rng, e[0])
        ys = [model.sample(rng, t) for t in e[1:]]
        lhs, rhs = _boundary_sides(model, x, ys)
        chk.compare(lhs, rhs, [x, *ys])
    return chk


def _star(model, a, b):
    return model.braces(a, [b])


def check_prelie(model, rng, samples) -> _Check:
    chk = _Check(model, "preLie")
    for _ in range(samples):
        def fits(e):
            return sum(e) - 2 <= model.cap

        e = _pick_exts(rng, model, 3, hi=min(model.max_ext, 3), fits=fits)
        a, b, c = (model.sample(rng, t) for t in e)
        lhs = _star(model, _star(model, a, b), c) - _star(model, a, _star(model, b, c))
        rhs = _star(model, _star(model, a, c), b) - _star(model, a, _star(model, c, b))
        chk.compare(lhs, _scaled(rhs, _sgn(model.sdeg(b) * model.sdeg(c))), [a, b, c])
    return chk


def check_ext1_associativity(model, rng, samples) -> _Check:
    chk = _Check(model, "ext1_associativity")
    for _ in range(samples):
        x, y = model.sample(rng, 1), model.sample(rng, 1)
        z = model.sample(rng, rng.randint(1, min(model.max_ext, model.cap)))
        lhs = _star(model, _star(model, x, y), z)
        rhs = _star(model, x, _star(model, y, z))
        chk.compare(lhs, rhs, [x, y, z])
    return chk


def check_diagonal_action(model, rng, samples) -> _Check:
    chk = _Check(model, "diagonal_action")
    for _ in range(samples):
        x, terms = model.diag_sample(rng)

        def fits(e):
            return e[0] + e[1] <= model.cap

        e = _pick_exts(rng, model, 2, hi=min(model.max_ext, 3), fits=fits)
        Y, Z = model.sample(rng, e[0]), model.sample(rng, e[1])
        lhs = model.braces(x, [model.cup(Y, Z)])
        rhs = model.zero()
        for c, h1, h2 in terms:
            term = model.cup(model.act(h1, Y), model.act(h2, Z))
            rhs = rhs + (term if c == 1 else term.scale(c))
        chk.compare(lhs, rhs, [x, Y, Z])
    return chk


def check_well_graded_vanishing(model, rng, samples, limit: int = 4000) -> _Check:
    chk = _Check(model, "well_graded_vanishing")
    count = 0
    for p in range(1, model.max_ext + 1):
        for a in model.basis_elements(p):
            for extra in (1, 2):
                k = p + extra  # B_{k+1}(a, ...) with external degree p < k
                ys = [model.sample(rng, 1) for _ in range(k)]
                chk.zero(model.braces(a, ys), [a, *ys])
            count += 1
            if count >= limit:
                return chk
    return chk


def check_d_is_derivation(model, rng, samples) -> _Check:
    chk = _Check(model, "d_is_derivation")
    for _ in range(samples):
        def fits(e):
            return sum(e) + 1 <= model.cap

        e = _pick_exts(rng, model, 2, hi=min(model.max_ext, 3), fits=fits)
        a, b = model.sample(rng, e[0]), model.sample(rng, e[1])
        lhs = model.d(model.cup(a, b))
        rhs = model.cup(model.d(a), b) + _scaled(model.cup(a, model.d(b)), _sgn(model.sdeg(a) + 1))
        chk.compare(lhs, rhs, [a, b])
    return chk


def run_identity(identity: str, model, samples: int = 100, seed: int = 0,
                 report: AxiomReport | None = None) -> AxiomReport:
    """Evaluate one relation on ``samples`` seeded random inputs."""
    rep = report if report is not None else AxiomReport(f"{identity} on {model.name}")
    rng = random.Random(f"{seed}:{identity}")
    if identity == "brace_relation":
        check_brace_relation(model, rng, samples).close(rep)
    elif identity == "distributivity":
        check_distributivity(model, rng, samples).close(rep)
    elif identity == "left_distributivity_B2":
        check_distributivity(model, rng, samples, name="left_distributivity_B2", nmax=1).close(rep)
    elif identity == "boundary_of_Bm":
        for m in BOUNDARY_ARITIES:
            check_boundary(model, rng, samples, m).close(rep)
    elif identity == "preLie":
        check_prelie(model, rng, samples).close(rep)
    elif identity == "ext1_associativity":
        check_ext1_associativity(model, rng, samples).close(rep)
    elif identity == "diagonal_action":
        check_diagonal_action(model, rng, samples).close(rep)
    elif identity == "well_graded_vanishing":
        check_well_graded_vanishing(model, rng, samples).close(rep, "exhaustive over basis elements")
    elif identity == "d_is_derivation":
        check_d_is_derivation(model, rng, samples).close(rep)
    else:
        raise ValueError(f"unknown identity {identity!r}")
    return rep


def run_suite(model, samples: int = 100, seed: int = 0,
              identities: Sequence[str] = IDENTITY_IDS) -> AxiomReport:
    rep = AxiomReport(f"Cacti identities on {model.name} (samples={samples}, seed={seed})")
    for ident in identities:
        run_identity(ident, model, samples, seed, rep)
    return rep
