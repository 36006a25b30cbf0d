"""The two explicit graded modules and their generator actions.

``Delta``
    The standard module induced from the coinvariant algebra; basis
    ``v_{i,j} = x^i (x) xibar^j`` with ``i >= 0``, ``0 <= j < n`` and degree
    ``i - j``.
``NablaM``
    The co-standard side model with basis ``v_{i,j}``, ``i >= 0``,
    ``0 <= j < n`` and degree ``i + j - (n - 1)``.

Module scalars live in the cyclotomic field (they are reduced modulo the
cyclotomic polynomial after every operation), not in the group ring: the
action of an idempotent on an ``s``-eigenvector is only a projection after
that reduction.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .algebra import DEGREE, CyclicParams, PBWElement, epsilon
from .linalg import GradedMatrix
from .scalars import CycloElem, field_normalize, is_zero

__all__ = [
    "DELTA",
    "NABLA",
    "ModVector",
    "act",
    "act_delta",
    "act_nabla",
    "act_pbw",
    "basis_vector",
    "coordinates",
    "degree_of",
    "eu_matrix",
    "generator_matrix",
    "graded_basis",
    "operator_matrix",
]

DELTA = "Delta"
NABLA = "NablaM"


class ModVector:
    """A finite combination of basis vectors ``v_{i,j}`` of one module."""

    __slots__ = ("tag", "n", "entries")

    def __init__(self, tag: str, n: int, entries: dict | None = None):
        if tag not in (DELTA, NABLA):
            raise ValueError(f"unknown module tag {tag!r}")
        self.tag = tag
        self.n = n
        clean = {}
        for (i, j), a in (entries or {}).items():
            if i < 0 or not 0 <= j < n:
                raise ValueError(f"basis index ({i}, {j}) out of range")
            if type(a) is int:
                if a:
                    clean[(i, j)] = a
                continue
            a = field_normalize(a)
            if not _exact_zero(a):
                clean[(i, j)] = a
        self.entries = clean

    def __add__(self, other: "ModVector") -> "ModVector":
        self._check(other)
        out = dict(self.entries)
        for key, a in other.entries.items():
            out[key] = out[key] + a if key in out else a
        return ModVector(self.tag, self.n, out)

    def __sub__(self, other: "ModVector") -> "ModVector":
        return self + other.scale(-1)

    def __neg__(self) -> "ModVector":
        return self.scale(-1)

    def scale(self, factor) -> "ModVector":
        factor = field_normalize(factor)
        if _exact_zero(factor):
            return ModVector(self.tag, self.n)
        return ModVector(self.tag, self.n, {k: a * factor for k, a in self.entries.items()})

    def __eq__(self, other):
        if not isinstance(other, ModVector):
            return NotImplemented
        return self.tag == other.tag and self.n == other.n and (self - other).is_zero()

    def is_zero(self) -> bool:
        return not self.entries

    def max_abs(self) -> float:
        return max((abs(complex(a)) for a in self.entries.values()), default=0.0)

    def _check(self, other: "ModVector") -> None:
        if self.tag != other.tag or self.n != other.n:
            raise ValueError("vectors live in different modules")

    def degrees(self) -> set[int]:
        return {degree_of(self.tag, i, j, self.n) for (i, j) in self.entries}

    def __repr__(self):
        inner = ", ".join(f"v{key}: {a}" for key, a in sorted(self.entries.items()))
        return f"ModVector({self.tag}, {{{inner}}})"


def _from_raw(tag: str, n: int, out: dict) -> ModVector:
    """Build a vector from freshly accumulated entries with valid keys."""
    v = ModVector.__new__(ModVector)
    v.tag = tag
    v.n = n
    clean = {}
    for key, a in out.items():
        if type(a) is int:
            if a:
                clean[key] = a
            continue
        a = field_normalize(a)
        if not _exact_zero(a):
            clean[key] = a
    v.entries = clean
    return v


def _exact_zero(a) -> bool:
    if isinstance(a, CycloElem):
        return a.is_zero()
    return a == 0


def basis_vector(tag: str, n: int, i: int, j: int, coeff=1) -> ModVector:
    return ModVector(tag, n, {(i, j): coeff})


def degree_of(tag: str, i: int, j: int, n: int) -> int:
    return i - j if tag == DELTA else i + j - (n - 1)


def _accumulate(out: dict, key: tuple, a) -> None:
    out[key] = out[key] + a if key in out else a


def act_delta(g: str, v: ModVector, params: CyclicParams) -> ModVector:
    """Action of a generator on the standard module."""
    if v.tag != DELTA:
        raise ValueError("act_delta needs a Delta vector")
    n = params.n
    out: dict = {}
    if g == "x":
        for (i, j), a in v.entries.items():
            out[(i + 1, j)] = a
    elif g == "s":
        for (i, j), a in v.entries.items():
            out[(i, j)] = a * params.q_pow(-(i - j))
    elif g == "xi":
        for (i, j), a in v.entries.items():
            if j + 1 < n:
                _accumulate(out, (i, j + 1), a)
            if i >= 1:
                coeff = i + params.delta(i - j, -j)
                if coeff != 0:
                    _accumulate(out, (i - 1, j), a * coeff)
    else:
        raise ValueError(f"unknown generator {g!r}")
    return _from_raw(DELTA, n, out)


def act_nabla(g: str, v: ModVector, params: CyclicParams) -> ModVector:
    """Action of a generator on the module M."""
    if v.tag != NABLA:
        raise ValueError("act_nabla needs a NablaM vector")
    n = params.n
    out: dict = {}
    if g == "xi":
        for (i, j), a in v.entries.items():
            if i >= 1:
                out[(i - 1, j)] = a
    elif g == "s":
        for (i, j), a in v.entries.items():
            out[(i, j)] = a * params.q_pow(-(i + j + 1))
    elif g == "x":
        c = params._lookup  # c[m] = c_{m+1}; hot loop, so no delta() calls
        for (i, j), a in v.entries.items():
            if j + 1 < n:
                key = (i, j + 1)
                out[key] = out[key] + a if key in out else a
            coeff = i + 1 + c[(i + j + 1) % n] - c[j % n]
            if coeff != 0:
                key = (i + 1, j)
                out[key] = out[key] + a * coeff if key in out else a * coeff
    else:
        raise ValueError(f"unknown generator {g!r}")
    return _from_raw(NABLA, n, out)


def act(g: str, v: ModVector, params: CyclicParams) -> ModVector:
    return act_delta(g, v, params) if v.tag == DELTA else act_nabla(g, v, params)


def _apply_power(g: str, times: int, v: ModVector, params: CyclicParams) -> ModVector:
    for _ in range(times):
        if v.is_zero():
            break
        v = act(g, v, params)
    return v


def act_pbw(element: PBWElement, v: ModVector, params: CyclicParams) -> ModVector:
    """Action of a PBW element: x^a s^b xi^d acts as xi first, then s, then x."""
    total = ModVector(v.tag, v.n)
    for (a, b, d), coeff in element.terms.items():
        w = _apply_power("xi", d, v, params)
        w = _apply_power("s", b, w, params)
        w = _apply_power("x", a, w, params)
        if not params.is_exact:
            coeff = coeff.embed()
        total = total + w.scale(coeff)
    return total


def graded_basis(tag: str, k: int, n: int) -> list[tuple[int, int]]:
    """Ordered basis of the degree-k piece.

    NablaM: ``v_{k+n-1,0}, v_{k+n-2,1}, ...`` (increasing j).
    Delta: ``v_{k+n-1,n-1}, v_{k+n-2,n-2}, ...`` (decreasing j).
    """
    return list(_graded_basis(tag, k, n))


@lru_cache(maxsize=4096)
def _graded_basis(tag: str, k: int, n: int) -> tuple[tuple[int, int], ...]:
    return tuple(_enumerate_basis(tag, k, n))


def _enumerate_basis(tag: str, k: int, n: int) -> list[tuple[int, int]]:
    if k < 1 - n:
        return []
    if tag == NABLA:
        total = k + n - 1
        return [(total - j, j) for j in range(n) if total - j >= 0]
    if tag == DELTA:
        return [(k + j, j) for j in range(n - 1, -1, -1) if k + j >= 0]
    raise ValueError(f"unknown module tag {tag!r}")


def coordinates(v: ModVector, basis: list[tuple[int, int]], zero=0) -> list:
    """Coordinates of ``v`` in ``basis``; raises if ``v`` has other components."""
    index = {key: pos for pos, key in enumerate(basis)}
    out = [zero] * len(basis)
    for key, a in v.entries.items():
        if key not in index:
            raise ValueError(f"component {key} lies outside the given basis")
        out[index[key]] = a
    return out


def operator_matrix(
    tag: str,
    k: int,
    params: CyclicParams,
    apply,
    shift: int = 0,
    source: list | None = None,
    target: list | None = None,
) -> GradedMatrix:
    """Matrix of ``apply`` from the degree-k piece to degree ``k + shift``."""
    n = params.n
    if source is None:
        source = graded_basis(tag, k, n)
    if target is None:
        target = graded_basis(tag, k + shift, n)
    zero = params.zero()
    cols = [coordinates(apply(basis_vector(tag, n, i, j)), target, zero) for (i, j) in source]
    rows = [[cols[c][r] for c in range(len(source))] for r in range(len(target))]
    return GradedMatrix(rows, list(target), list(source))


def generator_matrix(tag: str, g: str, k: int, params: CyclicParams) -> GradedMatrix:
    return operator_matrix(tag, k, params, lambda v: act(g, v, params), DEGREE[g])


def eu_matrix(params: CyclicParams, k: int) -> GradedMatrix:
    """eu on the degree-k piece of Delta: upper bidiagonal.

    Diagonal entry r (1-indexed) is ``k + (n - r) - c_r``; the superdiagonal
    is 1.
    """
    n = params.n
    basis = graded_basis(DELTA, k, n)
    size = len(basis)
    zero = params.zero()
    rows = [[zero] * size for _ in range(size)]
    for r in range(1, size + 1):
        rows[r - 1][r - 1] = k + (n - r) - params.ci(r)
        if r < size:
            rows[r - 1][r] = zero + 1
    return GradedMatrix(rows, list(basis), list(basis))


def composed_eu_matrix(params: CyclicParams, k: int) -> GradedMatrix:
    """eu on Delta_k computed from its PBW expansion and the generator actions."""
    from .algebra import eu_element

    eu = eu_element(params)
    return operator_matrix(DELTA, k, params, lambda v: act_pbw(eu, v, params))


def epsilon_action(i: int, v: ModVector, params: CyclicParams) -> ModVector:
    return act_pbw(epsilon(params.n, i), v, params)


def degree_pieces(tag: str, n: int, lo: int, hi: int) -> Iterable[tuple[int, list]]:
    for k in range(lo, hi + 1):
        yield k, graded_basis(tag, k, n)


def is_homogeneous(v: ModVector) -> bool:
    return len(v.degrees()) <= 1


def vectors_equal(u: ModVector, v: ModVector, tol: float = 0.0) -> bool:
    diff = u - v
    return all(is_zero(a, tol) for a in diff.entries.values())
