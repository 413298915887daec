"""JSON-compatible presentation files.

Format::

    {"name": ..., "field": {"kind": "Prime", "p": 7}, "basis": [...],
     "degrees": [...], "unit": "1", "counit": {"g": "1"},
     "mult": {"g*x": {"xg": "-1"}}, "comult": {"x": {"x|1": "1", "g|x": "1"}},
     "differential": {"y": {"1": "1"}}}

Missing entries mean zero; a file without ``comult`` describes an algebra.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .algebra import AlgebraPresentation, BialgebraPresentation
from .errors import MalformedPresentation, ParseError
from .scalar import FieldSpec


def _split(key: str, sep: str, n: int) -> tuple[str, ...]:
    parts = tuple(p.strip() for p in key.split(sep))
    if len(parts) != n:
        raise ParseError(f"expected {n} labels separated by {sep!r} in {key!r}")
    return parts


def _scalar_table(table: Mapping, field: FieldSpec) -> dict:
    out = {}
    for k, v in table.items():
        if not isinstance(v, (int, str)) or isinstance(v, bool):
            raise ParseError(f"bad scalar {v!r} for {k!r}")
        out[k] = field.coerce(v)
    return out


def presentation_from_dict(data: Mapping[str, Any], field: FieldSpec | None = None):
    """Build an algebra or bialgebra presentation from parsed JSON."""
    try:
        declared = FieldSpec.from_dict(data.get("field"))
        F = field or declared
        basis = list(data["basis"])
        degrees = data.get("degrees")
        unit = data.get("unit", basis[0] if basis else None)
        mult = {_split(k, "*", 2): _scalar_table(v, F) for k, v in data.get("mult", {}).items()}
        diff = {k: _scalar_table(v, F) for k, v in data.get("differential", {}).items()}
        name = data.get("name", "unnamed")
        if "comult" not in data and "counit" not in data:
            return AlgebraPresentation(name, F, basis, degrees, unit, mult, diff)
        comult = {}
        for k, terms in data.get("comult", {}).items():
            comult[k] = {_split(t, "|", 2): c for t, c in _scalar_table(terms, F).items()}
        counit = _scalar_table(data.get("counit", {}), F)
        return BialgebraPresentation(name, F, basis, degrees, unit, mult, comult, counit, diff)
    except KeyError as exc:
        raise MalformedPresentation(f"missing field {exc.args[0]!r}") from None


def presentation_to_dict(P: AlgebraPresentation) -> dict:
    F = P.field
    lab = P.basis
    out: dict[str, Any] = {
        "name": P.name,
        "field": F.to_dict(),
        "basis": list(lab),
        "degrees": list(P.degrees),
        "unit": lab[P.unit],
        "mult": {
            f"{lab[i]}*{lab[j]}": {lab[k]: F.fmt(c) for k, c in sorted(v.items())}
            for (i, j), v in sorted(P.mult.items())
        },
    }
    if P.differential:
        out["differential"] = {
            lab[i]: {lab[k]: F.fmt(c) for k, c in sorted(v.items())}
            for i, v in sorted(P.differential.items())
        }
    if P.is_bialgebra:
        out["counit"] = {lab[i]: F.fmt(c) for i, c in enumerate(P.counit) if c != 0}
        out["comult"] = {
            lab[i]: {f"{lab[a]}|{lab[b]}": F.fmt(c) for (a, b), c in sorted(v.items())}
            for i, v in sorted(P.comult.items())
        }
    return out


def read_json(path: str | Path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None


def load_presentation(path: str | Path, field: FieldSpec | None = None):
    return presentation_from_dict(read_json(path), field)


def dump_presentation(P: AlgebraPresentation, path: str | Path | None = None) -> str:
    text = json.dumps(presentation_to_dict(P), indent=2, sort_keys=False)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text
