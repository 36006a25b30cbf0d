"""Singular vectors of M and the homomorphism Delta -> M they induce.

The s-fixed vectors of degree 0 in M killed by ``xi^n`` form an
n-dimensional space with basis ``psi_i = v_{i, n-1-i} / (n-1)!``.  A vector
``psi_t = sum_i t_i psi_i`` determines the module map sending
``v_{i,j} = x^i xi^j v_{0,0}`` in Delta to ``x^i xi^j psi_t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import CyclicParams
from .linalg import GradedMatrix, rank
from .modules import (
    DELTA,
    NABLA,
    ModVector,
    act_nabla,
    basis_vector,
    coordinates,
    graded_basis,
)

__all__ = [
    "HomReport",
    "default_t",
    "delta_to_nabla_hom",
    "hom_image",
    "lift_psi",
    "psi_orbit",
    "psi_vector",
    "singular_space_dim",
    "verify_singular",
]


def default_t(n: int) -> tuple:
    """t = (0, ..., 0, 1)."""
    return (0,) * (n - 1) + (1,)


def lift_psi(i: int, n: int) -> ModVector:
    if not 0 <= i <= n - 1:
        raise ValueError(f"psi index {i} out of range for n={n}")
    return basis_vector(NABLA, n, i, n - 1 - i, Fraction(1, math.factorial(n - 1)))


def psi_vector(t: Sequence, n: int) -> ModVector:
    if len(t) != n:
        raise ValueError(f"t needs {n} entries")
    scale = Fraction(1, math.factorial(n - 1))
    entries = {(i, n - 1 - i): ti * scale for i, ti in enumerate(t)}
    return ModVector(NABLA, n, entries)


def _xi_n(v: ModVector, params: CyclicParams) -> ModVector:
    for _ in range(params.n):
        v = act_nabla("xi", v, params)
    return v


def verify_singular(v: ModVector, params: CyclicParams) -> bool:
    """True iff xi^n kills v and s fixes v."""
    return _xi_n(v, params).is_zero() and act_nabla("s", v, params) == v


def singular_space_dim(params: CyclicParams, degree: int = 0) -> int:
    """dim {v in M_degree : xi^n v = 0, s v = v}, by a stacked kernel computation."""
    n = params.n
    basis = graded_basis(NABLA, degree, n)
    if not basis:
        return 0
    target = graded_basis(NABLA, degree - n, n)
    zero = params.zero()
    cols = []
    for (i, j) in basis:
        v = basis_vector(NABLA, n, i, j)
        top = coordinates(_xi_n(v, params), target, zero) if target else []
        sv = act_nabla("s", v, params) - v
        cols.append(top + coordinates(sv, basis, zero))
    rows = [[cols[c][r] for c in range(len(basis))] for r in range(len(cols[0]))]
    return len(basis) - rank(rows)


def hom_image(v: ModVector, params: CyclicParams, t: Sequence) -> ModVector:
    """Image of a Delta vector under v_{i,j} -> x^i xi^j psi_t."""
    if v.tag != DELTA:
        raise ValueError("hom_image needs a Delta vector")
    n = params.n
    psi = psi_vector(t, n)
    out = ModVector(NABLA, n)
    for (i, j), a in v.entries.items():
        w = psi
        for _ in range(j):
            w = act_nabla("xi", w, params)
        for _ in range(i):
            w = act_nabla("x", w, params)
        out = out + w.scale(a)
    return out


@dataclass
class HomReport:
    matrices: dict[int, GradedMatrix]
    iso: bool
    deficient_degrees: list[int] = field(default_factory=list)

    @property
    def first_failure(self) -> int | None:
        return self.deficient_degrees[0] if self.deficient_degrees else None


def psi_orbit(params: CyclicParams, t: Sequence, K: int, scaled: bool = True):
    """Yield ``(k, {j: x^(k+j) xi^j psi_t})`` for k = 1-n, ..., K.

    These vectors span the degree-k piece of the submodule generated by
    ``psi_t`` (only ``j <= n-1`` matter since xi^n kills psi_t).  With
    ``scaled=False`` the common factor 1/(n-1)! is dropped, which leaves
    every span unchanged and keeps integer data integral.
    """
    n = params.n
    psi = psi_vector(t, n)
    if not scaled:
        psi = psi.scale(math.factorial(n - 1))
    xi_images = [psi]
    for _ in range(n - 1):
        xi_images.append(act_nabla("xi", xi_images[-1], params))
    current: dict[int, ModVector] = {}
    for k in range(1 - n, K + 1):
        for j in list(current):
            current[j] = act_nabla("x", current[j], params)
        if 0 <= -k <= n - 1:
            current[-k] = xi_images[-k]
        yield k, current


def delta_to_nabla_hom(params: CyclicParams, t: Sequence | None = None, K: int | None = None) -> HomReport:
    """Per-degree matrices of Delta_k -> M_k for 1-n <= k <= K and the iso verdict."""
    n = params.n
    if t is None:
        t = default_t(n)
    if K is None:
        K = 3 * n
    zero = params.zero()
    matrices: dict[int, GradedMatrix] = {}
    deficient: list[int] = []
    for k, images in psi_orbit(params, t, K):
        source = graded_basis(DELTA, k, n)
        target = graded_basis(NABLA, k, n)
        cols = [coordinates(images[j], target, zero) for (_i, j) in source]
        rows = [[cols[c][r] for c in range(len(source))] for r in range(len(target))]
        mat = GradedMatrix(rows, list(target), list(source))
        matrices[k] = mat
        if len(source) != len(target) or mat.rank() < len(target):
            deficient.append(k)
    return HomReport(matrices, not deficient, deficient)
