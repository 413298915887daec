"""Named example algebras and bialgebras."""

from __future__ import annotations

import math
import re

from .algebra import AlgebraPresentation, BialgebraPresentation, change_basis
from .errors import UnsupportedParams
from .scalar import FieldSpec, QQ


def _power_label(sym: str, k: int) -> str:
    if k == 0:
        return ""
    return sym if k == 1 else f"{sym}{k}"


def _primitive_root(p: int) -> int:
    if p == 2:
        return 1
    phi = p - 1
    factors = {q for q in range(2, phi + 1) if phi % q == 0 and all(q % r for r in range(2, int(math.isqrt(q)) + 1))}
    for w in range(2, p):
        if all(pow(w, phi // q, p) != 1 for q in factors):
            return w
    raise UnsupportedParams(f"no primitive root mod {p}")


def root_of_unity(m: int, k: int, field: FieldSpec) -> int:
    """The primitive m-th root of unity omega^(k(p-1)/m), omega the least primitive root."""
    if math.gcd(k, m) != 1:
        raise UnsupportedParams(f"index {k} is not coprime to {m}")
    if not field.is_prime:
        if m == 2:
            return -1
        raise UnsupportedParams(f"the rationals contain no primitive {m}-th root of unity")
    p = field.p
    if (p - 1) % m:
        raise UnsupportedParams(f"F{p} contains no primitive {m}-th root of unity")
    return pow(_primitive_root(p), k * (p - 1) // m, p)


def trivial_bialgebra(field: FieldSpec = QQ) -> BialgebraPresentation:
    return BialgebraPresentation("k", field, ["1"], [0], "1", {("1", "1"): {"1": 1}},
                                 {"1": {("1", "1"): 1}}, {"1": 1})


def sweedler4(field: FieldSpec = QQ) -> BialgebraPresentation:
    if field.characteristic == 2:
        raise UnsupportedParams("sweedler4 requires characteristic different from 2")
    basis = ["1", "g", "x", "xg"]
    table = {
        ("g", "g"): {"1": 1}, ("g", "x"): {"xg": -1}, ("g", "xg"): {"x": -1},
        ("x", "g"): {"xg": 1}, ("xg", "g"): {"x": 1},
    }
    mult = {("1", b): {b: 1} for b in basis}
    mult.update({(b, "1"): {b: 1} for b in basis})
    mult.update(table)
    comult = {
        "1": {("1", "1"): 1},
        "g": {("g", "g"): 1},
        "x": {("x", "1"): 1, ("g", "x"): 1},
        "xg": {("xg", "g"): 1, ("1", "xg"): 1},
    }
    return BialgebraPresentation("sweedler4", field, basis, None, "1", mult, comult,
                                 {"1": 1, "g": 1})


def taft(m: int, xi_index: int = 1, field: FieldSpec | None = None) -> BialgebraPresentation:
    """Taft algebra: g^m = 1, x^m = 0, gx = xi xg, Delta g = g(x)g, Delta x = x(x)g + 1(x)x."""
    if m < 2:
        raise UnsupportedParams("taft requires m >= 2")
    field = field or QQ
    xi = root_of_unity(m, xi_index, field)
    pairs = [(i, j) for j in range(m) for i in range(m)]
    idx = {pr: n for n, pr in enumerate(pairs)}
    labels = [(_power_label("g", i) + _power_label("x", j)) or "1" for i, j in pairs]
    mult = {}
    for (i, j) in pairs:
        for (k, l) in pairs:
            if j + l >= m:
                continue
            # x^j g^k = xi^{-jk} g^k x^j
            c = field.norm(field.inv(field.coerce(xi)) ** (j * k)) if field.is_prime else (xi ** (j * k))
            mult[(idx[(i, j)], idx[(k, l)])] = {idx[((i + k) % m, j + l)]: c}
    g, x, one = idx[(1, 0)], idx[(0, 1)], idx[(0, 0)]
    gens = BialgebraPresentation(
        "tmp", field, labels, None, one, mult,
        {one: {(one, one): 1}, g: {(g, g): 1}, x: {(x, g): 1, (one, x): 1}}, [0] * len(pairs),
    )
    comult = {}
    for (i, j) in pairs:
        acc = {(one, one): 1}
        for _ in range(i):
            acc = gens.tensor_mul(acc, gens.delta_basis(g))
        for _ in range(j):
            acc = gens.tensor_mul(acc, gens.delta_basis(x))
        comult[idx[(i, j)]] = acc
    counit = [1 if j == 0 else 0 for (i, j) in pairs]
    name = f"taft({m},{xi_index})"
    return BialgebraPresentation(name, field, labels, None, one, mult, comult, counit)


def group_algebra(n: int, field: FieldSpec = QQ) -> BialgebraPresentation:
    """k[Z_n] with basis 1, g, g2, ..."""
    if n < 1:
        raise UnsupportedParams("group order must be positive")
    labels = [_power_label("g", i) or "1" for i in range(n)]
    mult = {(i, j): {(i + j) % n: 1} for i in range(n) for j in range(n)}
    comult = {i: {(i, i): 1} for i in range(n)}
    return BialgebraPresentation(f"group_algebra(Z_{n})", field, labels, None, 0, mult, comult, [1] * n)


def dual_group_algebra(n: int, field: FieldSpec = QQ) -> BialgebraPresentation:
    """Functions on Z_n, basis {1} U {delta_i : i != 0}; delta_0 = 1 - sum delta_i."""
    if n < 1:
        raise UnsupportedParams("group order must be positive")
    raw_labels = [f"delta{i}" for i in range(n)]
    mult = {(i, i): {i: 1} for i in range(n)}
    comult = {}
    for k in range(n):
        comult[k] = {(i, (k - i) % n): 1 for i in range(n)}
    counit = [1] + [0] * (n - 1)
    raw = BialgebraPresentation("raw", field, raw_labels, None, 0, mult, comult, counit)
    vectors = [{i: 1 for i in range(n)}] + [{i: 1} for i in range(1, n)]
    labels = ["1"] + raw_labels[1:]
    return change_basis(raw, vectors, labels, 0, name=f"dual_group_algebra(Z_{n})")


def trunc_poly(m: int, field: FieldSpec = QQ) -> AlgebraPresentation:
    """k[y]/y^m."""
    if m < 1:
        raise UnsupportedParams("trunc_poly requires m >= 1")
    labels = [_power_label("y", i) or "1" for i in range(m)]
    mult = {(i, j): {i + j: 1} for i in range(m) for j in range(m) if i + j < m}
    return AlgebraPresentation(f"trunc_poly({m})", field, labels, None, 0, mult)


def matrix_algebra(n: int, field: FieldSpec = QQ) -> AlgebraPresentation:
    """M_n(k) on the basis {1} U {e_ij} minus e_nn."""
    if n < 1:
        raise UnsupportedParams("matrix_algebra requires n >= 1")
    cells = [(i, j) for i in range(n) for j in range(n)]
    pos = {c: k for k, c in enumerate(cells)}
    mult = {}
    for (i, j) in cells:
        for (k, l) in cells:
            if j == k:
                mult[(pos[(i, j)], pos[(k, l)])] = {pos[(i, l)]: 1}
    raw_labels = [f"e{i + 1}{j + 1}" for i, j in cells]
    raw = AlgebraPresentation("raw", field, raw_labels, None, 0, mult)
    last = pos[(n - 1, n - 1)]
    vectors = [{pos[(i, i)]: 1 for i in range(n)}]
    labels = ["1"]
    for c in cells:
        if pos[c] != last:
            vectors.append({pos[c]: 1})
            labels.append(raw_labels[pos[c]])
    return change_basis(raw, vectors, labels, 0, name=f"matrix_algebra({n})")


def super_line(field: FieldSpec = QQ) -> AlgebraPresentation:
    """k[y]/y^2 with |y| = 1."""
    return AlgebraPresentation("super_line", field, ["1", "y"], [0, 1], "1",
                               {("1", "1"): {"1": 1}, ("1", "y"): {"y": 1}, ("y", "1"): {"y": 1}})


def dg_super_line(field: FieldSpec = QQ) -> AlgebraPresentation:
    """k[y]/y^2 with |y| = -1 and d(y) = 1."""
    return AlgebraPresentation("dg_super_line", field, ["1", "y"], [0, -1], "1",
                               {("1", "1"): {"1": 1}, ("1", "y"): {"y": 1}, ("y", "1"): {"y": 1}},
                               {"y": {"1": 1}})


_BUILDERS = {
    "k": (trivial_bialgebra, 0),
    "sweedler4": (sweedler4, 0),
    "taft": (taft, 2),
    "group_algebra": (group_algebra, 1),
    "dual_group_algebra": (dual_group_algebra, 1),
    "trunc_poly": (trunc_poly, 1),
    "matrix_algebra": (matrix_algebra, 1),
    "super_line": (super_line, 0),
    "dg_super_line": (dg_super_line, 0),
}

CATALOG_NAMES = tuple(_BUILDERS)


def make_example(name: str, *params, field: FieldSpec | None = None):
    """Build a catalog entry, e.g. ``make_example("taft", 3, field=GF(7))``."""
    if name not in _BUILDERS:
        raise UnsupportedParams(f"unknown catalog entry {name!r}")
    builder, maxp = _BUILDERS[name]
    if len(params) > maxp:
        raise UnsupportedParams(f"{name} takes at most {maxp} parameter(s)")
    params = tuple(int(p) for p in params)
    if name == "taft":
        if not params:
            raise UnsupportedParams("taft needs m")
        return taft(*params, field=field or QQ)
    if maxp and not params:
        raise UnsupportedParams(f"{name} needs a parameter")
    return builder(*params, field or QQ)


_ID_RE = re.compile(r"^\s*([a-z_0-9]+?)\s*(?:\((.*)\))?\s*$")


def parse_catalog_id(text: str) -> tuple[str, tuple[int, ...]]:
    """Accept ``taft:3:1``, ``taft(3,1)``, ``group_algebra(Z_3)`` or ``group_algebra:3``."""
    if ":" in text:
        head, *rest = text.split(":")
        return head.strip(), tuple(int(r.strip().removeprefix("Z_")) for r in rest if r.strip())
    m = _ID_RE.match(text)
    if not m:
        raise UnsupportedParams(f"cannot parse catalog id {text!r}")
    head, args = m.group(1), m.group(2)
    params = ()
    if args:
        params = tuple(int(a.strip().removeprefix("Z_")) for a in args.split(",") if a.strip())
    return head, params


def example_from_id(text: str, field: FieldSpec | None = None):
    name, params = parse_catalog_id(text)
    return make_example(name, *params, field=field)


def catalog_bialgebras(field: FieldSpec = QQ) -> list[BialgebraPresentation]:
    """The bialgebras of the catalog that exist over ``field`` (small parameters)."""
    out = [trivial_bialgebra(field)]
    if field.characteristic != 2:
        out.append(sweedler4(field))
    out += [group_algebra(2, field), group_algebra(3, field),
            dual_group_algebra(2, field), dual_group_algebra(3, field)]
    for m in (2, 3):
        try:
            out.append(taft(m, 1, field))
        except UnsupportedParams:
            pass
    return out


def catalog_algebras(field: FieldSpec = QQ) -> list[AlgebraPresentation]:
    return [trunc_poly(2, field), trunc_poly(3, field), matrix_algebra(2, field),
            super_line(field), dg_super_line(field)]
