"""Endomorphisms of the standard module Delta.

Endomorphisms correspond to vectors of Delta that are fixed by s and
killed by ``xi^n``.  Such vectors live in degrees kn; in degree kn every
vector is s-fixed, so the relevant space is the kernel of
``xi^n: Delta_{kn} -> Delta_{(k-1)n}``, whose determinant has the closed
form ``prod_{i,j} (kn + (i - j) - (c_j - c_i))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import CyclicParams
from .criteria import congruence_multiple
from .linalg import GradedMatrix, rank
from .modules import DELTA, act_delta, graded_basis, operator_matrix
from .scalars import DEFAULT_TOL, ConsistencyError, PreconditionError

__all__ = [
    "EndReport",
    "critical_ks",
    "det_formula",
    "direct_fixed_killed_dim",
    "end_dim",
    "xi_n_matrix",
]


def _xi_power(v, times: int, params: CyclicParams):
    for _ in range(times):
        if v.is_zero():
            break
        v = act_delta("xi", v, params)
    return v


def xi_n_matrix(params: CyclicParams, k: int) -> GradedMatrix:
    """xi^n: Delta_{kn} -> Delta_{(k-1)n} in the bases v_{kn+i,i} and v_{(k-1)n+i,i}."""
    if k < 1:
        raise PreconditionError("k must be at least 1")
    n = params.n
    source = [(k * n + i, i) for i in range(n)]
    target = [((k - 1) * n + i, i) for i in range(n)]
    mat = operator_matrix(DELTA, k * n, params, lambda v: _xi_power(v, n, params), -n, source, target)
    return mat


def det_formula(params: CyclicParams, k: int):
    """prod over 1 <= i, j <= n of (kn + (i - j) - (c_j - c_i))."""
    if k < 1:
        raise PreconditionError("k must be at least 1")
    n = params.n
    out = 1
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out = out * (k * n + (i - j) - params.delta(j, i))
    return out


def critical_ks(params: CyclicParams, tol: float = DEFAULT_TOL) -> list[int]:
    """All k >= 1 at which some factor of :func:`det_formula` vanishes."""
    n = params.n
    ks = set()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            k = congruence_multiple((j - i) + params.delta(j, i), n, tol)
            if k is not None and k >= 1:
                ks.add(k)
    return sorted(ks)


@dataclass
class EndReport:
    dim_end: int
    critical_ks: list[tuple[int, int]]
    det_values: dict[int, object] = field(default_factory=dict)


def end_dim(params: CyclicParams, K: int | None = None, tol: float = DEFAULT_TOL) -> EndReport:
    """dim End(Delta) = n + sum of the nullities of xi^n over the critical degrees.

    ``det_values`` records the closed-form determinant for k = 1..K (default 3n)
    and every critical k.
    """
    n = params.n
    if K is None:
        K = 3 * n
    crit = critical_ks(params, tol)
    pairs = []
    for k in crit:
        mat = xi_n_matrix(params, k)
        nullity = mat.nullity(tol)
        if nullity == 0:
            raise ConsistencyError(f"xi^n is invertible in the critical degree {k * n}")
        pairs.append((k, nullity))
    dets = {k: det_formula(params, k) for k in sorted(set(range(1, K + 1)) | set(crit))}
    return EndReport(n + sum(v for _k, v in pairs), pairs, dets)


@lru_cache(maxsize=None)
def _s_fixed_dim(n: int, degree: int) -> int:
    """dim ker(s - 1) on Delta_degree over Q(zeta), via restriction of scalars."""
    p = CyclicParams.exact(n, [0] * n)  # the s-action does not involve c
    s_minus = operator_matrix(DELTA, degree, p, lambda v: act_delta("s", v, p) - v)
    return s_minus.shape[1] - rank(s_minus.rows)


def direct_fixed_killed_dim(params: CyclicParams, degree: int, tol: float = DEFAULT_TOL) -> int:
    """dim {v in Delta_degree : xi^n v = 0, s v = v} by direct linear algebra."""
    n = params.n
    basis = graded_basis(DELTA, degree, n)
    if not basis:
        return 0
    fixed = _s_fixed_dim(n, degree)
    if fixed == 0:
        return 0
    xi_n = operator_matrix(DELTA, degree, params, lambda v: _xi_power(v, n, params), -n)
    if fixed == len(basis):
        return xi_n.nullity(tol)
    # general case: stack both conditions
    p0 = CyclicParams.exact(n, [0] * n) if params.is_exact else params
    s_minus = operator_matrix(DELTA, degree, p0, lambda v: act_delta("s", v, p0) - v)
    stacked = xi_n.rows + s_minus.rows
    return len(basis) - rank(stacked, tol)
