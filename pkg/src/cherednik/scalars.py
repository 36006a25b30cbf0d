"""Scalar towers used throughout the package.

Three kinds of scalar appear:

* exact rationals, stored as ``int`` when integral and ``fractions.Fraction``
  otherwise (see :func:`canon`);
* elements of the group ring ``Q[zeta]/(zeta^n - 1)`` (:class:`CycloElem`),
  which can be reduced modulo the cyclotomic polynomial when honest
  field arithmetic is needed;
* Python ``complex`` numbers for floating point work.

Division must go through :func:`qdiv` so that two integers never produce a
float by accident.
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Number
from typing import Iterable, Sequence, Union

__all__ = [
    "DEFAULT_TOL",
    "ConsistencyError",
    "PreconditionError",
    "CycloElem",
    "NumericError",
    "Scalar",
    "StructuralError",
    "canon",
    "cyclo_embed",
    "cyclo_is_zero",
    "cyclo_mul",
    "cyclotomic_poly",
    "field_normalize",
    "is_exact_scalar",
    "is_zero",
    "parse_complex",
    "parse_rational",
    "parse_scalar",
    "qdiv",
    "root_of_unity",
    "scalar_to_str",
    "to_complex",
]

DEFAULT_TOL = 1e-9


class StructuralError(ValueError):
    """Operands of incompatible shape (e.g. group rings of different order)."""


class NumericError(ArithmeticError):
    """A floating point computation produced a non-finite value."""


Rational = Union[int, Fraction]


def canon(x: Rational) -> Rational:
    """Return ``x`` as an ``int`` if it is integral, else as a ``Fraction``."""
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):  # bool and friends
        return int(x)
    raise TypeError(f"not a rational: {x!r}")


def qdiv(a, b):
    """Exact division for rationals, ordinary division otherwise."""
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return canon(Fraction(a) / b)
    return a / b


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")
_FLOAT = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(rf"[+-]?{_FLOAT}(?:[+-](?:{_FLOAT})?[ij])?|[+-]?(?:{_FLOAT})?[ij]")


def parse_rational(text: str) -> Rational:
    """Parse ``"p"`` or ``"p/q"``.

    >>> parse_rational("-3/6")
    Fraction(-1, 2)
    >>> parse_rational("4")
    4
    """
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational number: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return canon(Fraction(num, den))


def parse_complex(text: str) -> complex:
    """Parse ``"a"``, ``"a+bi"``, ``"a-bi"`` (also ``"bi"``) with decimal literals.

    >>> parse_complex("0.3+0.7i")
    (0.3+0.7j)
    """
    s = text.replace(" ", "")
    if not _COMPLEX_RE.fullmatch(s):
        raise ValueError(f"not a complex number: {text!r}")
    s = re.sub(r"(^|[+-])[ij]$", r"\g<1>1j", s).replace("i", "j")
    z = complex(s)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite complex number: {text!r}")
    return z


def parse_scalar(text: str, mode: str = "exact"):
    if mode == "exact":
        return parse_rational(text)
    if mode == "float":
        return parse_complex(text)
    raise ValueError(f"unknown mode {mode!r}")


def scalar_to_str(x) -> str:
    """Stable text form used in reports (inverse of the parsers above)."""
    if isinstance(x, (int, Fraction)):
        return str(canon(x))
    if isinstance(x, CycloElem):
        return str(x)
    z = complex(x)
    return f"{z.real!r}{'+' if z.imag >= 0 or math.isnan(z.imag) else '-'}{abs(z.imag)!r}i"


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients (constant term first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _exact_divide(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _exact_divide(num: list[int], den: list[int]) -> list[int]:
    num = num[:]
    quot = [0] * (len(num) - len(den) + 1)
    for k in range(len(quot) - 1, -1, -1):
        coef = num[k + len(den) - 1]  # den is monic
        quot[k] = coef
        for i, d in enumerate(den):
            num[k + i] -= coef * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return quot


class CycloElem:
    """An element of the group ring ``Q[zeta]/(zeta^n - 1)``.

    ``coeffs[k]`` is the coefficient of ``zeta**k``.  Coefficients are
    usually exact rationals but any numbers supporting ring operations work.
    Equality and :meth:`is_zero` are group-ring notions; use :meth:`reduce`
    to pass to the cyclotomic field.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise StructuralError("CycloElem needs at least one coefficient")
        self.coeffs = coeffs

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycloElem":
        coeffs = [0] * n
        coeffs[k % n] = 1
        return cls(coeffs)

    @classmethod
    def scalar(cls, n: int, a) -> "CycloElem":
        return cls([a] + [0] * (n - 1))

    def _coerce(self, other) -> "CycloElem":
        if isinstance(other, CycloElem):
            if other.n != self.n:
                raise StructuralError(f"group ring orders differ: {self.n} vs {other.n}")
            return other
        if isinstance(other, Number):
            return CycloElem.scalar(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElem(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElem(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CycloElem):
            if other.n != self.n:
                raise StructuralError(f"group ring orders differ: {self.n} vs {other.n}")
            n = self.n
            out = [0] * n
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b != 0:
                        out[(i + j) % n] += a * b
            return CycloElem(out)
        if isinstance(other, Number):
            return CycloElem(a * other for a in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Number):
            return CycloElem(qdiv(a, other) for a in self.coeffs)
        return NotImplemented

    def shift(self, k: int) -> "CycloElem":
        """Multiply by ``zeta**k``."""
        n = self.n
        k %= n
        if k == 0:
            return self
        return CycloElem(self.coeffs[(i - k) % n] for i in range(n))

    def __eq__(self, other):
        if isinstance(other, Number):
            other = CycloElem.scalar(self.n, other)
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("CycloElem", self.coeffs))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def reduce(self) -> "CycloElem":
        """Canonical representative modulo the n-th cyclotomic polynomial."""
        phi = cyclotomic_poly(self.n)
        deg = len(phi) - 1
        a = list(self.coeffs)
        for k in range(self.n - 1, deg - 1, -1):
            lead = a[k]
            if lead == 0:
                continue
            a[k] = 0
            for i in range(deg):
                if phi[i]:
                    a[k - deg + i] -= lead * phi[i]
        if all(isinstance(v, (int, Fraction)) for v in a):
            a = [canon(v) for v in a]
        return CycloElem(a)

    def is_zero_field(self) -> bool:
        return self.reduce().is_zero()

    def embed(self) -> complex:
        n = self.n
        return sum(
            (complex(a) * cmath.exp(2j * math.pi * k / n) for k, a in enumerate(self.coeffs) if a != 0),
            0j,
        )

    def __complex__(self):
        return self.embed()

    def __repr__(self):
        return f"CycloElem({list(self.coeffs)!r})"

    def __str__(self):
        parts = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            a_str = str(a)
            if k == 0:
                parts.append(a_str)
            else:
                mono = "z" if k == 1 else f"z^{k}"
                parts.append(mono if a == 1 else f"({a_str})*{mono}")
        return " + ".join(parts) if parts else "0"


def cyclo_mul(a: CycloElem, b: CycloElem) -> CycloElem:
    if len(a.coeffs) != len(b.coeffs):
        raise StructuralError(f"group ring orders differ: {a.n} vs {b.n}")
    return a * b


def cyclo_embed(a: CycloElem) -> complex:
    return a.embed()


def cyclo_is_zero(a: CycloElem) -> bool:
    return a.is_zero()


@lru_cache(maxsize=None)
def root_of_unity(n: int, k: int):
    """zeta_n**k as a canonical field scalar (a rational when possible)."""
    return field_normalize(CycloElem.zeta(n, k))


def field_normalize(x):
    """Canonical form of a scalar in the cyclotomic field (or a plain number)."""
    if isinstance(x, CycloElem):
        r = x.reduce()
        rest = r.coeffs[1:]
        if all(v == 0 for v in rest):
            head = r.coeffs[0]
            return canon(head) if isinstance(head, (int, Fraction)) else head
        return r
    if isinstance(x, Fraction):
        return canon(x)
    return x


def is_exact_scalar(x) -> bool:
    if isinstance(x, CycloElem):
        return all(isinstance(a, (int, Fraction)) for a in x.coeffs)
    return isinstance(x, (int, Fraction))


def is_zero(x, tol: float = 0.0) -> bool:
    """Field zero test; complex values use the absolute tolerance ``tol``."""
    if isinstance(x, CycloElem):
        return x.is_zero_field()
    if isinstance(x, (int, Fraction)):
        return x == 0
    return abs(x) <= tol


def to_complex(x) -> complex:
    if isinstance(x, CycloElem):
        return x.embed()
    return complex(x)


Scalar = Union[int, Fraction, CycloElem, complex]


def check_finite(values: Sequence[complex]) -> None:
    for v in values:
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise NumericError("non-finite value encountered")


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


class PreconditionError(ValueError):
    """An operation was called outside its domain."""
