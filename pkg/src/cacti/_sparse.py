"""Sparse linear combinations as plain dicts ``key -> raw scalar``."""

from __future__ import annotations

from .scalar import FieldSpec


def add_into(target: dict, key, coeff, field: FieldSpec) -> None:
    if coeff == 0:
        return
    v = field.norm(target.get(key, 0) + coeff)
    if v == 0:
        target.pop(key, None)
    else:
        target[key] = v


def combine(field: FieldSpec, *pairs) -> dict:
    """``combine(F, (c1, v1), (c2, v2), ...)`` = c1*v1 + c2*v2 + ..."""
    out: dict = {}
    for c, vec in pairs:
        if c == 0:
            continue
        for k, x in vec.items():
            add_into(out, k, c * x, field)
    return out


def scale(vec: dict, c, field: FieldSpec) -> dict:
    if c == 0:
        return {}
    out = {}
    for k, x in vec.items():
        y = field.norm(c * x)
        if y != 0:
            out[k] = y
    return out


def clean(vec: dict, field: FieldSpec) -> dict:
    out = {}
    for k, x in vec.items():
        y = field.norm(x)
        if y != 0:
            out[k] = y
    return out
