"""Exact field arithmetic over the rationals and prime fields.

Internally the rest of the package works with *raw* values: Python ``int``
or :class:`fractions.Fraction` over the rationals (integral values are kept
as ``int``) and ``int`` residues in ``[0, p)`` over a prime field.  A
:class:`FieldSpec` knows how to canonicalise, combine and print raw values.
:class:`Scalar` is the user-facing immutable wrapper.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .errors import DivisionByZero, MixedFields, ParseError

Raw = Union[int, Fraction]

_SCALAR_RE = re.compile(r"^\s*(-?)(\d+)(?:/(\d+))?\s*$")


class FieldKind(str, enum.Enum):
    RATIONAL = "Rational"
    PRIME = "Prime"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: FieldKind = FieldKind.RATIONAL
    p: int = 0

    def __post_init__(self):
        kind = FieldKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is FieldKind.PRIME:
            if not _is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
        elif self.p:
            raise ValueError("the rational field takes no modulus")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls(FieldKind.RATIONAL, 0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(FieldKind.PRIME, p)

    @classmethod
    def from_dict(cls, data) -> "FieldSpec":
        if data is None:
            return cls.rational()
        kind = str(data.get("kind", "Rational"))
        if kind.lower() in ("rational", "q"):
            return cls.rational()
        if kind.lower() in ("prime", "fp"):
            return cls.prime(int(data["p"]))
        raise ParseError(f"unknown field kind {kind!r}")

    @classmethod
    def from_text(cls, text: str) -> "FieldSpec":
        """Parse ``Q`` / ``QQ`` / ``F7`` / ``GF(7)`` / ``7``."""
        t = text.strip().upper()
        if t in ("Q", "QQ", "RATIONAL"):
            return cls.rational()
        m = re.fullmatch(r"(?:F|GF|GF\()?(\d+)\)?", t)
        if not m:
            raise ParseError(f"cannot parse field {text!r}")
        return cls.prime(int(m.group(1)))

    def to_dict(self) -> dict:
        if self.is_prime:
            return {"kind": "Prime", "p": self.p}
        return {"kind": "Rational"}

    @property
    def is_prime(self) -> bool:
        return self.kind is FieldKind.PRIME

    @property
    def characteristic(self) -> int:
        return self.p if self.is_prime else 0

    def __str__(self):
        return f"F{self.p}" if self.is_prime else "Q"

    # raw-value arithmetic -------------------------------------------------

    def coerce(self, x) -> Raw:
        """Canonical raw value for ``x`` (int, Fraction, Scalar or text)."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise MixedFields(f"{x.field} scalar used over {self}")
            return x.value
        if isinstance(x, str):
            return parse_raw(x, self)
        if isinstance(x, (bool, np.bool_)):
            x = int(x)
        if isinstance(x, np.integer):
            x = int(x)
        if self.is_prime:
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise DivisionByZero(f"denominator {x.denominator} vanishes mod {self.p}")
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return int(x) % self.p
        if isinstance(x, Fraction):
            return x.numerator if x.denominator == 1 else x
        if isinstance(x, int):
            return x
        raise TypeError(f"cannot coerce {type(x).__name__} to {self}")

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def norm(self, x: Raw) -> Raw:
        """Re-canonicalise the result of ``+ - *`` on raw values."""
        if self.is_prime:
            return x % self.p
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        return x

    def add(self, a, b):
        return self.norm(a + b)

    def sub(self, a, b):
        return self.norm(a - b)

    def mul(self, a, b):
        return self.norm(a * b)

    def neg(self, a):
        return self.norm(-a)

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.is_prime:
            return pow(int(a), -1, self.p)
        return self.norm(Fraction(1) / a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def normalize_array(self, arr: np.ndarray) -> np.ndarray:
        if self.is_prime:
            return np.mod(arr, self.p)
        return arr

    @property
    def small_prime(self) -> bool:
        """Residue products fit comfortably in int64 accumulators."""
        return self.is_prime and self.p < (1 << 20)

    def zeros(self, shape) -> np.ndarray:
        """Dense coefficient array: int64 residues over small F_p, object otherwise."""
        if self.small_prime:
            return np.zeros(shape, dtype=np.int64)
        out = np.empty(shape, dtype=object)
        out.fill(0)
        return out

    def array_dtype(self):
        return np.int64 if self.small_prime else object

    def fmt(self, x: Raw) -> str:
        return format_raw(x, self)

    def __call__(self, x) -> "Scalar":
        return Scalar(self, self.coerce(x))


QQ = FieldSpec.rational()


def GF(p: int) -> FieldSpec:
    return FieldSpec.prime(p)


def parse_raw(text: str, field: FieldSpec) -> Raw:
    m = _SCALAR_RE.match(text)
    if not m:
        raise ParseError(f"not a scalar: {text!r}")
    sign, num, den = m.groups()
    n = int(num)
    d = int(den) if den is not None else 1
    if sign:
        n = -n
    if field.is_prime:
        if d % field.p == 0:
            raise DivisionByZero(f"denominator {d} vanishes mod {field.p}")
        return n * pow(d, -1, field.p) % field.p
    if d == 0:
        raise DivisionByZero("zero denominator")
    return field.norm(Fraction(n, d))


def format_raw(x: Raw, field: FieldSpec) -> str:
    if field.is_prime:
        return str(int(x) % field.p)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Scalar:
    """Immutable exact field element in canonical form."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", field.coerce(value))

    def __setattr__(self, key, value):
        raise AttributeError("Scalar is immutable")

    def _other(self, other) -> Raw:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise MixedFields(f"{self.field} and {other.field}")
            return other.value
        if isinstance(other, (int, Fraction, np.integer)):
            return self.field.coerce(other)
        raise MixedFields(f"cannot combine Scalar with {type(other).__name__}")

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return Scalar(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def inv(self):
        return Scalar(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        try:
            return self.value == self._other(other)
        except MixedFields:
            if isinstance(other, Scalar):
                raise
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return format_raw(self.value, self.field)

    def __repr__(self):
        return f"Scalar({self}, {self.field})"


def parse_scalar(text: str, field: FieldSpec) -> Scalar:
    return Scalar(field, parse_raw(text, field))


def arith(a: Scalar, b: Scalar | None, op: str):
    """Dispatch ``op`` in {add, sub, mul, div, neg, inv, eq}."""
    if b is not None and a.field != b.field:
        raise MixedFields(f"{a.field} and {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    if op == "eq":
        return a == b
    raise ValueError(f"unknown op {op!r}")
