"""Exact field arithmetic.

Two fields are supported: the rationals (values are :class:`fractions.Fraction`)
and prime fields ``GF(p)`` (values are Python ints in ``range(p)``).  The hot
code paths work on these *raw* values through the methods of
:class:`FieldSpec`; :class:`Scalar` is the value-plus-field wrapper used at API
boundaries where mixing fields must be detected.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, FieldMismatch, ParseError

Raw = Union[Fraction, int]

_SCALAR_RE = re.compile(r"-?[0-9]+(/[1-9][0-9]*)?")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if p % q == 0:
            return p == q
    if p < 2**64:
        # deterministic Miller-Rabin witnesses for 64-bit integers
        d, r = p - 1, 0
        while d % 2 == 0:
            d //= 2
            r += 1
        for a in small:
            x = pow(a, d, p)
            if x in (1, p - 1):
                continue
            for _ in range(r - 1):
                x = x * x % p
                if x == p - 1:
                    break
            else:
                return False
        return True
    i = 41
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``p is None``) or the prime field of order ``p``."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(int(p))

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``"rational"`` or ``"fp:<p>"``."""
        text = text.strip().lower()
        if text in ("rational", "rationals", "q"):
            return cls(None)
        if text.startswith("fp:"):
            try:
                return cls(int(text[3:]))
            except ValueError as exc:
                raise ParseError(f"bad field spec {text!r}: {exc}") from None
        raise ParseError(f"bad field spec {text!r}")

    @property
    def is_prime(self) -> bool:
        return self.p is not None

    @property
    def kind(self) -> str:
        return "rationals" if self.p is None else "prime"

    def __str__(self) -> str:
        return "rational" if self.p is None else f"fp:{self.p}"

    # raw-value arithmetic ---------------------------------------------------
    @property
    def zero(self) -> Raw:
        return Fraction(0) if self.p is None else 0

    @property
    def one(self) -> Raw:
        return Fraction(1) if self.p is None else 1

    def from_int(self, k: int) -> Raw:
        return Fraction(k) if self.p is None else k % self.p

    def coerce(self, value) -> Raw:
        """Bring an int, Fraction or :class:`Scalar` into canonical raw form."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"{value.field} scalar used in {self}")
            return value.value
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise FieldMismatch(f"denominator of {value} is not invertible mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a: Raw, b: Raw) -> Raw:
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a: Raw, b: Raw) -> Raw:
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a: Raw, b: Raw) -> Raw:
        return a * b if self.p is None else a * b % self.p

    def neg(self, a: Raw) -> Raw:
        return -a if self.p is None else (-a) % self.p

    def inv(self, a: Raw) -> Raw:
        if a == 0:
            raise DivisionByZero("division by zero")
        return 1 / Fraction(a) if self.p is None else pow(a, -1, self.p)

    def div(self, a: Raw, b: Raw) -> Raw:
        if b == 0:
            raise DivisionByZero("division by zero")
        if self.p is None:
            return Fraction(a) / b
        return a * pow(b, -1, self.p) % self.p

    def parse_raw(self, text: str) -> Raw:
        text = text.strip()
        if not _SCALAR_RE.fullmatch(text):
            if re.fullmatch(r"-?[0-9]+/0+", text):
                raise DivisionByZero(f"zero denominator in {text!r}")
            raise ParseError(f"not a scalar: {text!r}")
        if "/" in text:
            num, den = text.split("/")
            return self.coerce(Fraction(int(num), int(den)))
        return self.from_int(int(text))

    def render(self, a: Raw) -> str:
        if self.p is None:
            a = Fraction(a)
            return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        return str(a)


RATIONALS = FieldSpec(None)


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field."""

    value: Raw
    field: FieldSpec = RATIONALS

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.coerce(self.value))

    def _other(self, other) -> Raw:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field} and {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field.add(self.value, self._other(other)), self.field)

    def __sub__(self, other):
        return Scalar(self.field.sub(self.value, self._other(other)), self.field)

    def __mul__(self, other):
        return Scalar(self.field.mul(self.value, self._other(other)), self.field)

    def __truediv__(self, other):
        return Scalar(self.field.div(self.value, self._other(other)), self.field)

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.field.neg(self.value), self.field)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (TypeError, ValueError, FieldMismatch):
            return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field))

    def __str__(self):
        return self.field.render(self.value)

    def __repr__(self):
        return f"Scalar({self}, {self.field})"


def arith(op: str, a: Scalar, b: Scalar | None = None) -> Scalar:
    """Apply ``op`` in {add, sub, mul, div, neg}; ``b`` is ignored for ``neg``."""
    if op == "neg":
        return -a
    if b is None:
        raise TypeError(f"{op} needs two operands")
    if a.field != b.field:
        raise FieldMismatch(f"cannot combine {a.field} and {b.field}")
    try:
        fn = {"add": Scalar.__add__, "sub": Scalar.__sub__,
              "mul": Scalar.__mul__, "div": Scalar.__truediv__}[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(a, b)


def parse_scalar(text: str, field: FieldSpec = RATIONALS) -> Scalar:
    return Scalar(field.parse_raw(text), field)


def render_scalar(s: Scalar) -> str:
    return str(s)
