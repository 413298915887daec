"""Command-line front end.

Inputs are presentation, action or morphism files (JSON), or built-in names:
``catalog:<id>`` (e.g. ``catalog:sweedler4``, ``catalog:taft:3:1``),
``action:sweedler[:<mutation>]``, ``action:pairing:<id>`` and
``morphism:identity:<id>``.

Exit codes: 0 when every check passes, 1 on a mathematical failure,
2 on usage, parse or IO errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

from . import __version__
from .algebra import (AxiomReport, BialgebraPresentation, MorphismMatrix, check_axioms,
                      check_bialgebra_morphism, dual_bialgebra)
from .catalog import example_from_id
from .errors import CactiError, ExtractionFailure, NotABialgebraMorphism, ParseError
from .scalar import FieldSpec

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    field: str | None = None
    max_ext: int = 3
    max_q: int = 3
    samples: int = 100
    seed: int = 0
    format: str = "text"

    def header(self) -> str:
        parts = [f"{k}={'from-input' if v is None else v}" for k, v in asdict(self).items()]
        return f"# cacti {__version__} | " + " ".join(parts)


class Output:
    """Collects report sections and renders them as text or JSON."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self.sections: list[tuple[str, Any, str]] = []

    def add(self, name: str, data: Any, text: str) -> None:
        self.sections.append((name, data, text))

    def render(self) -> str:
        if self.cfg.format == "json":
            doc = {"version": __version__, "config": asdict(self.cfg),
                   "sections": {name: data for name, data, _ in self.sections}}
            return json.dumps(doc, indent=2, sort_keys=True)
        lines = [self.cfg.header()]
        for _, _, text in self.sections:
            lines.append(text)
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# loading inputs
# ---------------------------------------------------------------------------

def _field(cfg: RunConfig) -> FieldSpec | None:
    return FieldSpec.from_text(cfg.field) if cfg.field else None


def load_input(ref: str, F: FieldSpec | None):
    """A presentation, ActionMap or MorphismMatrix from a file or built-in name."""
    from .io import presentation_from_dict, read_json
    from .module_algebra import action_from_dict, pairing_action, sweedler_action

    if ref.startswith("catalog:"):
        return example_from_id(ref[len("catalog:"):], F)
    if ref.startswith("action:"):
        kind, _, rest = ref[len("action:"):].partition(":")
        if kind == "sweedler":
            return sweedler_action(F, rest or None)
        if kind == "pairing":
            return pairing_action(example_from_id(rest, F))
        raise ParseError(f"unknown built-in action {ref!r}")
    if ref.startswith("morphism:"):
        kind, _, rest = ref[len("morphism:"):].partition(":")
        if kind == "identity":
            return MorphismMatrix.identity(example_from_id(rest, F))
        raise ParseError(f"unknown built-in morphism {ref!r}")
    path = Path(ref)
    data = read_json(path)
    if "action" in data:
        return action_from_dict(data, path.parent, F)
    if "images" in data:
        return morphism_from_dict(data, path.parent, F)
    return presentation_from_dict(data, F)


def _load_ref(ref, base_dir, F):
    from .io import load_presentation, presentation_from_dict
    if isinstance(ref, dict):
        return presentation_from_dict(ref, F)
    if isinstance(ref, str) and ref.startswith("catalog:"):
        return example_from_id(ref[len("catalog:"):], F)
    if isinstance(ref, str):
        return load_presentation(Path(base_dir) / ref, F)
    raise ParseError(f"cannot load presentation from {ref!r}")


def morphism_from_dict(data: dict, base_dir=".", F: FieldSpec | None = None) -> MorphismMatrix:
    """``{source: ref, target: ref, images: {label: {label: scalar}}}``."""
    try:
        S, T = _load_ref(data["source"], base_dir, F), _load_ref(data["target"], base_dir, F)
    except KeyError as exc:
        raise ParseError(f"morphism file missing {exc.args[0]!r}") from None
    images = {k: {l: T.field.coerce(x) for l, x in v.items()} for k, v in data["images"].items()}
    return MorphismMatrix(S, T, images)


def _require(obj, cls, what: str):
    if not isinstance(obj, cls):
        raise ParseError(f"expected {what}, got {type(obj).__name__}")
    return obj


def _report(out: Output, name: str, rep: AxiomReport) -> bool:
    out.add(name, rep.to_dict(), rep.to_text())
    return rep.passed


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_check(cfg: RunConfig, args, out: Output) -> int:
    from .module_algebra import ActionMap, check_module_algebra
    obj = load_input(cfg.inputs[0], _field(cfg))
    if isinstance(obj, ActionMap):
        ok = _report(out, "module_algebra", check_module_algebra(obj, validate=False))
        ok &= _report(out, "bialgebra", check_axioms(obj.H))
        ok &= _report(out, "algebra", check_axioms(obj.A))
    elif isinstance(obj, MorphismMatrix):
        ok = _report(out, "morphism", check_bialgebra_morphism(obj))
    else:
        ok = _report(out, "axioms", check_axioms(obj))
    return EXIT_OK if ok else EXIT_FAIL


def _betti_section(out: Output, cx, lo: int, hi: int, reps: bool = True) -> None:
    from .homology import betti, representatives
    table = betti(cx, (lo, hi))
    data = table.to_dict()
    lines = [table.to_text()]
    if reps:
        data["representatives"] = {}
        for e in table.entries:
            if e.betti and e.rank_out is not None and not e.note:
                rs = [c.representative.to_text() for c in representatives(cx, e.degree)]
                data["representatives"][str(e.degree)] = rs
                for r in rs:
                    lines.append(f"H^{e.degree} representative: {r}")
    out.add("cohomology", data, "\n".join(lines))


WORD_LIMIT = 10 ** 7


def _check_word_budget(K, top: int) -> None:
    """Refuse runs whose degree top + 1 would hold more than WORD_LIMIT words."""
    from .errors import TruncationExceeded
    size = K.dim ** (top + 1)
    if size > WORD_LIMIT:
        raise TruncationExceeded(f"refusing degree {top}: (dim V)^{top + 1} = {size} words exceeds {WORD_LIMIT}")


def cmd_cobar_cohomology(cfg: RunConfig, args, out: Output) -> int:
    from .cobar import check_d_squared, cobar
    from .homology import CobarComplex
    H = _require(load_input(cfg.inputs[0], _field(cfg)), BialgebraPresentation, "a bialgebra")
    K = cobar(H)
    lo, hi = args.window if args.window else (1, cfg.max_ext)
    _check_word_budget(K, max(hi, cfg.max_ext))
    ok = _report(out, "d_squared", check_d_squared(K, min(cfg.max_ext + 1, 4)))
    _betti_section(out, CobarComplex(K), lo, hi)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_hochschild_cohomology(cfg: RunConfig, args, out: Output) -> int:
    from .homology import HochschildCochains
    A = load_input(cfg.inputs[0], _field(cfg))
    lo, hi = args.window if args.window else (0, cfg.max_q)
    _betti_section(out, HochschildCochains(A, max_q=max(hi + 1, cfg.max_q)), lo, hi)
    return EXIT_OK


def cmd_identities(cfg: RunConfig, args, out: Output) -> int:
    from .cacti_ops import check_all_identities
    from .cobar import cobar
    from .hochschild import well_graded_report
    P = load_input(cfg.inputs[0], _field(cfg))
    side = args.side or ("cobar" if isinstance(P, BialgebraPresentation) else "hochschild")
    if side == "cobar":
        P = _require(P, BialgebraPresentation, "a bialgebra")
        _check_word_budget(cobar(P), cfg.max_ext)
        rep = check_all_identities(cobar(P), cfg.samples, cfg.seed, cfg.max_ext)
    else:
        rep = well_graded_report(P, cfg.max_q, cfg.samples, cfg.seed)
    return EXIT_OK if _report(out, "identities", rep) else EXIT_FAIL


def cmd_induced(cfg: RunConfig, args, out: Output) -> int:
    from .homology import CobarComplex, HochschildCochains, class_bracket, cohomology_class, \
        image_rank, representatives
    from .hochschild import hdifferential
    from .module_algebra import ActionMap, InducedMorphism, check_module_algebra, verify_cacti_morphism
    act = _require(load_input(cfg.inputs[0], _field(cfg)), ActionMap, "an action")
    ok = _report(out, "module_algebra", check_module_algebra(act))
    if not ok and not args.verify:
        return EXIT_FAIL
    phi = InducedMorphism(act)
    if args.verify:
        ok &= _report(out, "verify", verify_cacti_morphism(act, cfg.max_ext, cfg.samples, cfg.seed, phi.K))
        ocx, hcx = CobarComplex(phi.K), HochschildCochains(act.A, max_q=4)
        lines, data = [], []
        for c in representatives(ocx, 2):
            f = phi(c.representative)
            cyc = hdifferential(f).is_zero()
            if not cyc:
                entry = {"class": c.representative.to_text(), "image": f.to_text(), "cocycle": False}
                data.append(entry)
                lines.append(f"phi({c.representative.to_text()}) = {f.to_text()}; d = 0: no")
                ok = False
                continue
            entry = {"class": c.representative.to_text(), "image": f.to_text(), "cocycle": True}
            line = f"phi({c.representative.to_text()}) = {f.to_text()}; d = 0: yes"
            if not f.is_zero():
                br = class_bracket(cohomology_class(hcx, f), cohomology_class(hcx, f))
                zero = "literal zero" if br.representative.is_zero() else (
                    "coboundary" if br.is_zero else "nonzero")
                entry["self_bracket"] = zero
                line += f"; [phi, phi] class: {zero}"
            data.append(entry)
            lines.append(line)
        out.add("degree_two", data, "\n".join(lines) if lines else "H^2 = 0")
    if args.image is not None:
        ocx, hcx = CobarComplex(phi.K), HochschildCochains(act.A, max_q=args.image + 1)
        rows = []
        for n in range(1, args.image + 1):
            reps = [phi(c.representative) for c in representatives(ocx, n)]
            rows.append({"degree": n, "source": len(reps), "image": image_rank(hcx, n, reps)})
        text = "\n".join(f"H^{r['degree']}: dim {r['source']} -> image dim {r['image']}" for r in rows)
        out.add("image", rows, "# image of H(Omega H) -> HH(A)\n" + text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_dual(cfg: RunConfig, args, out: Output) -> int:
    from .io import presentation_to_dict
    from .module_algebra import check_module_algebra, pairing_action
    H = _require(load_input(cfg.inputs[0], _field(cfg)), BialgebraPresentation, "a bialgebra")
    D = dual_bialgebra(H)
    ok = _report(out, "dual_axioms", check_axioms(D))
    ok &= _report(out, "pairing_action", check_module_algebra(pairing_action(H), validate=False))
    data = presentation_to_dict(D)
    out.add("dual", data, json.dumps(data, indent=2, sort_keys=True))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_extract(cfg: RunConfig, args, out: Output) -> int:
    from .cacti_ops import cacti_data, extract_bialgebra, extracted_in_original_basis
    from .cobar import cobar
    from .io import presentation_to_dict
    H = _require(load_input(cfg.inputs[0], _field(cfg)), BialgebraPresentation, "a bialgebra")
    try:
        ext = extract_bialgebra(cacti_data(cobar(H)), check_d=cfg.max_ext)
    except ExtractionFailure as exc:
        if exc.report is not None:
            _report(out, "d_squared", exc.report)
        out.add("extract", {"error": str(exc)}, f"extraction failed: {exc}")
        return EXIT_FAIL
    back = extracted_in_original_basis(ext, H)
    same = back.same_constants(H)
    data = presentation_to_dict(back)
    out.add("extract", {"identical": same, "presentation": data},
            f"round trip identical: {'yes' if same else 'no'}\n" + json.dumps(data, indent=2, sort_keys=True))
    return EXIT_OK if same else EXIT_FAIL


def cmd_lift(cfg: RunConfig, args, out: Output) -> int:
    from .module_algebra import lift_bialgebra_morphism
    f = _require(load_input(cfg.inputs[0], _field(cfg)), MorphismMatrix, "a morphism")
    try:
        lift, rep = lift_bialgebra_morphism(f, cfg.max_ext, cfg.samples, cfg.seed)
    except NotABialgebraMorphism as exc:
        if exc.report is not None:
            _report(out, "morphism", exc.report)
        return EXIT_FAIL
    ok = _report(out, "lift", rep)
    K, K2 = lift.K, lift.K2
    rows = {K.labels[v]: {K2.labels[k]: K.field.fmt(c) for k, c in sorted(img.items())}
            for v, img in enumerate(lift.letters)}
    text = "\n".join(f"{K.labels[v]} -> {_fmt_letter(K2, img)}" for v, img in enumerate(lift.letters))
    out.add("letters", rows, text)
    return EXIT_OK if ok else EXIT_FAIL


def _fmt_letter(K, vec) -> str:
    if not vec:
        return "0"
    return " + ".join(f"{K.field.fmt(c)} * {K.labels[k]}" for k, c in sorted(vec.items()))


def cmd_skew_cocycle(cfg: RunConfig, args, out: Output) -> int:
    from .hochschild import SkewDerivationChain, cochain_to_dict, hdifferential, skew_cocycle
    from .module_algebra import ActionMap
    act = _require(load_input(cfg.inputs[0], _field(cfg)), ActionMap, "an action")
    H = act.H
    ds, gs, hs = [], [], []
    for lab in args.chain.split(","):
        h = H.index(lab.strip())
        left, right = skew_primitive_type(H, h)
        ds.append(act.operator(h))
        gs.append(act.operator(left))
        hs.append(act.operator(right))
    chain = SkewDerivationChain(act.A, ds, gs, hs)
    sc = skew_cocycle(act.A, chain)
    df = hdifferential(sc.cochain)
    witness = next(iter(df.entries()), None)
    lab = act.A.basis
    wtext = None
    if witness is not None:
        _, idx, x = witness
        wtext = f"({','.join(lab[i] for i in idx[1:])}) -> {act.field.fmt(x)} * {lab[idx[0]]}"
    data = {"cochain": cochain_to_dict(sc.cochain), "violations": sc.violations,
            "cocycle": df.is_zero(), "witness": wtext}
    lines = [f"f = {sc.cochain.to_text()}",
             f"compatible: {'yes' if sc.compatible else 'no'}" +
             (f" ({'; '.join(sc.violations)})" if sc.violations else ""),
             f"d f = 0: {'yes' if df.is_zero() else 'no'}"]
    if wtext:
        lines.append(f"witness: d f{wtext}")
    out.add("skew_cocycle", data, "\n".join(lines))
    return EXIT_OK if sc.compatible and df.is_zero() else EXIT_FAIL


def skew_primitive_type(H: BialgebraPresentation, h: int) -> tuple[int, int]:
    """(b, a) with Delta(h) = b (x) h + h (x) a for group-like basis elements a, b.

    Then rho_h is a (rho_b, rho_a)-skew-derivation for any module algebra.
    """
    from .errors import NotGroupLike
    delta = dict(H.delta_basis(h))
    if delta == {(h, h): 1}:
        raise NotGroupLike(f"{H.basis[h]} is group-like, not skew-primitive")
    for (b, x), c in delta.items():
        if x != h or c != 1:
            continue
        for (y, a), e in delta.items():
            if y != h or e != 1:
                continue
            want = {(b, h): 1, (h, a): 1}
            if delta == want:
                return b, a
    raise NotGroupLike(f"{H.basis[h]} is not skew-primitive")


COMMANDS = {
    "check": cmd_check,
    "cobar-cohomology": cmd_cobar_cohomology,
    "hochschild-cohomology": cmd_hochschild_cohomology,
    "identities": cmd_identities,
    "induced": cmd_induced,
    "dual": cmd_dual,
    "extract": cmd_extract,
    "lift": cmd_lift,
    "skew-cocycle": cmd_skew_cocycle,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="override the field: Q or F<p> (e.g. F7)")
    common.add_argument("--max-ext", type=int, default=3, help="external degree cap on the cobar side")
    common.add_argument("--max-q", type=int, default=3, help="arity cap on the Hochschild side")
    common.add_argument("--samples", type=int, default=100, help="samples per sampled check")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="cacti", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"cacti {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("check", parents=[common], help="check bialgebra/algebra/action/morphism axioms")
    p.add_argument("input")
    for name in ("cobar-cohomology", "hochschild-cohomology"):
        p = sub.add_parser(name, parents=[common], help="Betti numbers and representative cocycles")
        p.add_argument("input")
        p.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"))
    p = sub.add_parser("identities", parents=[common], help="run the Cacti identity suite")
    p.add_argument("input")
    p.add_argument("--side", choices=("cobar", "hochschild"))
    p = sub.add_parser("induced", parents=[common], help="the morphism Omega(H) -> C*(A) of an action")
    p.add_argument("input")
    p.add_argument("--verify", action="store_true", help="verify the Cacti morphism and the degree-2 classes")
    p.add_argument("--image", type=int, metavar="N", help="image dimensions of H^n(Omega H) -> HH^n(A), n <= N")
    p = sub.add_parser("dual", parents=[common], help="the dual bialgebra and its pairing action")
    p.add_argument("input")
    p = sub.add_parser("extract", parents=[common], help="recover H from the Cacti structure on Omega(H)")
    p.add_argument("input")
    p = sub.add_parser("lift", parents=[common], help="lift a bialgebra morphism to Omega")
    p.add_argument("input")
    p = sub.add_parser("skew-cocycle", parents=[common], help="cocycle from a chain of skew-primitive actions")
    p.add_argument("input")
    p.add_argument("--chain", required=True, help="comma-separated H labels, e.g. xg,x")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig(args.command, [args.input], args.field, args.max_ext, args.max_q,
                    args.samples, args.seed, args.format)
    out = Output(cfg)
    try:
        code = COMMANDS[args.command](cfg, args, out)
    except (CactiError, OSError, json.JSONDecodeError) as exc:
        print(f"cacti: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(out.render())
    return code


if __name__ == "__main__":
    sys.exit(main())
