"""PBW normal ordering for the rational Cherednik algebra of Z/n.

The algebra is generated by ``x`` (degree +1), ``s`` (degree 0, ``s^n = 1``)
and ``xi`` (degree -1) subject to::

    s x = q^-1 x s,    xi s = q^-1 s xi,
    xi x = x xi + 1 + sum_k (c_{k+1} - c_k) eps_k

with ``q = exp(2 pi i / n)`` and ``eps_i = (1/n) sum_j q^(ij) s^j``.  Elements
are stored on the PBW basis ``x^a s^b xi^d`` with keys ``(a, b mod n, d)``
and group-ring coefficients (:class:`~cherednik.scalars.CycloElem`).

>>> p = CyclicParams.exact(2, [0, 0])
>>> normal_order(["xi", "x"], p).terms == {(1, 0, 1): CycloElem([1, 0]), (0, 0, 0): CycloElem([1, 0])}
True
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .scalars import (
    CycloElem,
    NumericError,
    canon,
    parse_complex,
    parse_rational,
    qdiv,
    root_of_unity,
)

__all__ = [
    "CyclicParams",
    "DEGREE",
    "GENERATORS",
    "PBWElement",
    "check_inner_grading",
    "commutator",
    "epsilon",
    "eu_element",
    "generator",
    "multiply",
    "normal_order",
    "xi_pow_x_identity",
]

GENERATORS = ("x", "s", "xi")
DEGREE = {"x": 1, "s": 0, "xi": -1}


def _as_rational(value):
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, bool):
        raise TypeError("boolean parameter")
    if isinstance(value, (int, Fraction)):
        return canon(value)
    if isinstance(value, float) and value.is_integer():
        return int(value)
    raise TypeError(f"exact mode needs rational parameters, got {value!r}")


def _as_complex(value) -> complex:
    if isinstance(value, str):
        return parse_complex(value)
    return complex(value)


@dataclass(frozen=True)
class CyclicParams:
    """The order ``n`` of the cyclic group and the parameters ``c_1..c_n``.

    ``c`` is stored 0-indexed (``c[0]`` is ``c_1``); use :meth:`ci` for the
    1-indexed lookup with indices reduced mod ``n`` so that ``c_0 = c_n = 0``.
    """

    n: int
    c: tuple
    mode: str = "exact"
    _lookup: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if self.mode not in ("exact", "float"):
            raise ValueError(f"mode must be 'exact' or 'float', got {self.mode!r}")
        c = tuple(self.c)
        if len(c) != self.n:
            raise ValueError(f"expected {self.n} parameters c_1..c_n, got {len(c)}")
        conv = _as_rational if self.mode == "exact" else _as_complex
        c = tuple(conv(v) for v in c)
        if c[-1] != 0:
            raise ValueError("the last parameter must vanish (c_n = 0)")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "_lookup", c)

    @classmethod
    def exact(cls, n: int, c: Iterable) -> "CyclicParams":
        return cls(n, tuple(c), "exact")

    @classmethod
    def floating(cls, n: int, c: Iterable) -> "CyclicParams":
        return cls(n, tuple(c), "float")

    @property
    def is_exact(self) -> bool:
        return self.mode == "exact"

    def ci(self, i: int):
        """c_i with the index read mod n (so c_0 = c_n = 0)."""
        return self._lookup[(i - 1) % self.n]

    def delta(self, i: int, j: int):
        """c_i - c_j."""
        return self._lookup[(i - 1) % self.n] - self._lookup[(j - 1) % self.n]

    def k(self, i: int):
        return qdiv(self.ci(i), self.n)

    def q_pow(self, m: int):
        """q^m as a field scalar (exact) or complex number (float)."""
        if self.is_exact:
            return root_of_unity(self.n, m % self.n)
        return _complex_root(self.n, m % self.n)

    def zero(self):
        return 0 if self.is_exact else 0j

    def with_c(self, c: Iterable) -> "CyclicParams":
        return CyclicParams(self.n, tuple(c), self.mode)


@lru_cache(maxsize=None)
def _complex_root(n: int, m: int) -> complex:
    return cmath.exp(2j * math.pi * m / n)


Key = tuple  # (a, b, d)


class PBWElement:
    """Finite linear combination of monomials ``x^a s^b xi^d``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        clean = {}
        for key, coeff in (terms or {}).items():
            if not isinstance(coeff, CycloElem):
                coeff = CycloElem.scalar(n, coeff)
            if not coeff.is_zero():
                a, b, d = key
                clean[(a, b % n, d)] = coeff
        self.terms = clean

    @classmethod
    def monomial(cls, n: int, a: int, b: int, d: int, coeff=1) -> "PBWElement":
        return cls(n, {(a, b, d): coeff})

    def __add__(self, other: "PBWElement") -> "PBWElement":
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms[key] + coeff if key in terms else coeff
        return PBWElement(self.n, terms)

    def __neg__(self) -> "PBWElement":
        return PBWElement(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "PBWElement") -> "PBWElement":
        return self + (-other)

    def scale(self, factor) -> "PBWElement":
        return PBWElement(self.n, {k: v * factor for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, PBWElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree_components(self) -> set[int]:
        return {a - d for (a, _b, d) in self.terms}

    def __repr__(self):
        inner = ", ".join(f"{k}: {v}" for k, v in sorted(self.terms.items()))
        return f"PBWElement(n={self.n}, {{{inner}}})"


def _tokens(a: int, b: int, d: int) -> tuple:
    """Word for the monomial x^a s^b xi^d; an int token m stands for s^m."""
    return ("x",) * a + ((b,) if b else ()) + ("xi",) * d


def _canonical_word(word: Iterable, n: int) -> tuple:
    """Merge adjacent s-powers and drop s^0."""
    out: list = []
    for tok in word:
        if tok == "s":
            tok = 1
        elif isinstance(tok, tuple) and tok and tok[0] == "s":
            tok = tok[1]
        if isinstance(tok, int) and not isinstance(tok, bool):
            tok %= n
            if out and isinstance(out[-1], int):
                tok = (out.pop() + tok) % n
            if tok:
                out.append(tok)
        elif tok in ("x", "xi"):
            out.append(tok)
        else:
            raise ValueError(f"unknown generator {tok!r}")
    return tuple(out)


def _redex_positions(word: tuple) -> list[int]:
    pos = []
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        if (isinstance(a, int) and b == "x") or (a == "xi" and (b == "x" or isinstance(b, int))):
            pos.append(i)
    return pos


@lru_cache(maxsize=None)
def _commutator_tail(params: CyclicParams) -> tuple:
    """gamma_j with [xi, x] = 1 + sum_j gamma_j s^j (gamma_0 vanishes)."""
    n = params.n
    gammas = []
    for j in range(n):
        coeffs = [0] * n
        for k in range(n):
            coeffs[(k * j) % n] += qdiv(params.delta(k + 1, k), n)
        gammas.append(CycloElem(coeffs))
    return tuple(gammas)


def _to_key(word: tuple) -> Key:
    a = b = d = 0
    for tok in word:
        if tok == "x":
            a += 1
        elif tok == "xi":
            d += 1
        else:
            b += tok
    return (a, b, d)


def normal_order(
    word: Sequence,
    params: CyclicParams,
    prefactor=None,
    strategy: str = "leftmost",
    rng: random.Random | None = None,
) -> PBWElement:
    """Rewrite a product of generators into PBW normal form.

    ``word`` is a sequence of ``"x"``, ``"s"``, ``"xi"`` (an ``int`` m is
    accepted as ``s^m``).  ``strategy`` chooses which out-of-order pair is
    rewritten first (``"leftmost"``, ``"rightmost"`` or ``"random"``); the
    result does not depend on it.
    """
    n = params.n
    word = tuple(word)
    if not word:
        raise ValueError("empty word")
    if prefactor is None:
        prefactor = CycloElem.scalar(n, 1)
    elif not isinstance(prefactor, CycloElem):
        prefactor = CycloElem.scalar(n, prefactor)
    if strategy == "random" and rng is None:
        rng = random.Random(0)
    gammas = _commutator_tail(params)
    pending: dict[tuple, CycloElem] = {_canonical_word(word, n): prefactor}
    result: dict[Key, CycloElem] = {}

    def push(w: tuple, coeff: CycloElem) -> None:
        w = _canonical_word(w, n)
        if w in pending:
            pending[w] = pending[w] + coeff
        else:
            pending[w] = coeff

    while pending:
        w, coeff = pending.popitem()
        if coeff.is_zero():
            continue
        pos = _redex_positions(w)
        if not pos:
            key = _to_key(w)
            result[key] = result[key] + coeff if key in result else coeff
            continue
        if strategy == "leftmost":
            i = pos[0]
        elif strategy == "rightmost":
            i = pos[-1]
        elif strategy == "random":
            i = rng.choice(pos)
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        a, b = w[i], w[i + 1]
        head, tail = w[:i], w[i + 2 :]
        if isinstance(a, int):  # s^m x = q^-m x s^m
            push(head + ("x", a) + tail, coeff.shift(-a))
        elif isinstance(b, int):  # xi s^m = q^-m s^m xi
            push(head + (b, "xi") + tail, coeff.shift(-b))
        else:  # xi x = x xi + 1 + sum_j gamma_j s^j
            push(head + ("x", "xi") + tail, coeff)
            if head + tail:
                push(head + tail, coeff)
            else:
                _add_key(result, (0, 0, 0), coeff)
            for j in range(1, n):
                g = gammas[j]
                if not g.is_zero():
                    push(head + (j,) + tail, coeff * g)
    out = PBWElement(n, result)
    if not params.is_exact:
        for v in out.terms.values():
            for z in v.coeffs:
                if not (math.isfinite(complex(z).real) and math.isfinite(complex(z).imag)):
                    raise NumericError("coefficient overflow during normal ordering")
    return out


def _add_key(result: dict, key: Key, coeff: CycloElem) -> None:
    result[key] = result[key] + coeff if key in result else coeff


def multiply(a: PBWElement, b: PBWElement, params: CyclicParams) -> PBWElement:
    """Product of two PBW elements, returned in normal form."""
    total = PBWElement(params.n)
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            word = _tokens(*ka) + _tokens(*kb)
            coeff = ca * cb
            if not word:
                total = total + PBWElement(params.n, {(0, 0, 0): coeff})
            else:
                total = total + normal_order(word, params, coeff)
    return total


def commutator(a: PBWElement, b: PBWElement, params: CyclicParams) -> PBWElement:
    return multiply(a, b, params) - multiply(b, a, params)


def generator(name: str, n: int) -> PBWElement:
    key = {"x": (1, 0, 0), "s": (0, 1, 0), "xi": (0, 0, 1)}[name]
    return PBWElement(n, {key: 1})


@lru_cache(maxsize=None)
def epsilon(n: int, i: int) -> PBWElement:
    """The idempotent eps_i = (1/n) sum_j q^(ij) s^j."""
    terms = {}
    for j in range(n):
        terms[(0, j, 0)] = CycloElem.zeta(n, i * j) / n
    return PBWElement(n, terms)


def xi_pow_x_identity(j: int, params: CyclicParams) -> PBWElement:
    """Closed form of xi^j x: x xi^j + j xi^(j-1) + [sum_i (c_{i+j} - c_i) eps_i] xi^(j-1)."""
    if j < 0:
        raise ValueError("j must be non-negative")
    n = params.n
    out = PBWElement(n, {(1, 0, j): 1})
    if j == 0:
        return out
    terms: dict[Key, CycloElem] = {(0, 0, j - 1): CycloElem.scalar(n, j)}
    for i in range(n):
        weight = params.delta(i + j, i)
        if weight == 0:
            continue
        for m in range(n):
            key = (0, m, j - 1)
            add = CycloElem.zeta(n, i * m) * qdiv(weight, n)
            terms[key] = terms[key] + add if key in terms else add
    return out + PBWElement(n, terms)


def eu_element(params: CyclicParams) -> PBWElement:
    """eu = x xi - sum_{i=1}^{n-1} c_i eps_i."""
    n = params.n
    out = PBWElement(n, {(1, 0, 1): 1})
    for i in range(1, n):
        if params.ci(i) != 0:
            out = out - epsilon(n, i).scale(params.ci(i))
    return out


def check_inner_grading(params: CyclicParams, eu: PBWElement | None = None) -> bool:
    """Check [eu, x] = x, [eu, xi] = -xi and [eu, s] = 0 by normal ordering."""
    n = params.n
    if eu is None:
        eu = eu_element(params)
    x, s, xi = generator("x", n), generator("s", n), generator("xi", n)
    return (
        commutator(eu, x, params) == x
        and commutator(eu, xi, params) == -xi
        and commutator(eu, s, params).is_zero()
    )
