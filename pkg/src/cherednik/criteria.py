"""The good parameter set F, semisimplicity and the generation criterion.

A parameter vector ``c`` lies in F when ``c_i - c_j = j - i`` holds
whenever ``c_i - c_j = j - i (mod n)``.  Membership in F is equivalent to
the nonsingularity of every ``D_k`` (the matrix of ``x: M_k -> M_{k+1}``,
``k >= 0``); together with the ``F_k`` matrices in negative degrees this
decides whether ``psi_t`` generates M.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import CyclicParams
from .homspace import default_t, psi_orbit, psi_vector
from .linalg import GradedMatrix, rank
from .modules import NABLA, act_nabla, basis_vector, coordinates, graded_basis, operator_matrix
from .scalars import DEFAULT_TOL, ConsistencyError, PreconditionError, is_zero, qdiv

__all__ = [
    "CriterionReport",
    "DkVerdict",
    "GenerationReport",
    "build_Dk",
    "build_Fk",
    "composed_Dk",
    "composed_Fk",
    "congruence_multiple",
    "dk_all_nonsingular",
    "generation_check",
    "generation_report",
    "good_translate",
    "in_F",
    "is_semisimple",
    "singular_degrees",
]


def congruence_multiple(value, n: int, tol: float = DEFAULT_TOL) -> int | None:
    """m with value = n*m if value lies in nZ (within tol for floats), else None."""
    if type(value) is int:
        return value // n if value % n == 0 else None
    if isinstance(value, (int, Fraction)):
        q = Fraction(value) / n
        return int(q) if q.denominator == 1 else None
    z = complex(value)
    m = round(z.real / n)
    if abs(z - n * m) < tol:
        return int(m)
    return None


def _pair_offsets(params: CyclicParams, tol: float):
    """(i, j, m) for every pair with c_i - c_j - (j - i) = n*m."""
    n = params.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            m = congruence_multiple(params.delta(i, j) - (j - i), n, tol)
            if m is not None:
                yield i, j, m


def singular_degrees(params: CyclicParams, tol: float = DEFAULT_TOL) -> list[tuple[int, int, int]]:
    """All (k, i, j) with k >= 0 where the j-th diagonal entry of D_k vanishes.

    The j-th diagonal entry is ``n + k + 1 - j + c_{k+1} - c_j``; it vanishes
    exactly when ``k = j - (n+1) - (c_i - c_j)`` for ``i = k+1 (mod n)``.
    """
    n = params.n
    out = set()
    for i, j, m in _pair_offsets(params, tol):
        if m == 0:
            continue
        # c_i - c_j = j - i + n m  gives  k = i - 1 - n (m + 1)
        k = i - 1 - n * (m + 1)
        if k >= 0:
            out.add((k, i, j))
    return sorted(out)


@dataclass
class CriterionReport:
    in_F: bool
    semisimple: bool
    failing_pairs: list[tuple[int, int, int]] = field(default_factory=list)
    singular_degrees: list[int] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.in_F


def in_F(params: CyclicParams, tol: float = DEFAULT_TOL) -> CriterionReport:
    """Membership in F with witnesses (i, j, m), m != 0."""
    if not params.is_exact and not tol > 0:
        raise PreconditionError("float mode needs a positive tolerance")
    failing = []
    semisimple = True
    for i, j, m in _pair_offsets(params, tol):
        if i != j:
            semisimple = False
        if m != 0:
            failing.append((i, j, m))
    ks = sorted({k for k, _i, _j in singular_degrees(params, tol)})
    return CriterionReport(not failing, semisimple, failing, ks)


def is_semisimple(params: CyclicParams, tol: float = DEFAULT_TOL) -> bool:
    """No congruence c_i - c_j = j - i (mod n) between distinct indices."""
    return in_F(params, tol).semisimple


def good_translate(params: CyclicParams) -> CyclicParams:
    """A parameter in F congruent to ``params`` modulo nZ^n.

    Indices are grouped by the equivalence ``i ~ j`` iff
    ``c_i - c_j = j - i (mod n)``; each class is pinned to a representative
    ``r`` (``n`` for the class of ``n``, the least index otherwise) via
    ``c'_j = c_r + r - j``.
    """
    if not params.is_exact:
        raise PreconditionError("good_translate needs exact rational parameters")
    n = params.n
    rep = list(range(n + 1))

    def find(a: int) -> int:
        while rep[a] != a:
            rep[a] = rep[rep[a]]
            a = rep[a]
        return a

    for i, j, _m in _pair_offsets(params, 0.0):
        ri, rj = find(i), find(j)
        if ri != rj:
            # keep n as a root; otherwise the smaller index
            if rj == n or (ri != n and rj < ri):
                ri, rj = rj, ri
            rep[rj] = ri
    new_c = []
    for j in range(1, n + 1):
        r = find(j)
        new_c.append(params.ci(r) + r - j)
    return params.with_c(new_c)


def build_Dk(params: CyclicParams, k: int) -> GradedMatrix:
    """n x n lower bidiagonal matrix of x: M_k -> M_{k+1}, k >= 0.

    Diagonal entry j (1-indexed) is ``n + k + 1 - j + c_{k+1} - c_j``.
    """
    if k < 0:
        raise PreconditionError("D_k is defined for k >= 0")
    n = params.n
    zero = params.zero()
    rows = [[zero] * n for _ in range(n)]
    for r in range(n):
        rows[r][r] = n + k - r + params.delta(k + 1, r + 1)
        if r + 1 < n:
            rows[r + 1][r] = zero + 1
    return GradedMatrix(rows, graded_basis(NABLA, k + 1, n), graded_basis(NABLA, k, n))


def _check_t(params: CyclicParams, t: Sequence) -> None:
    if len(t) != params.n:
        raise ValueError(f"t needs {params.n} entries")
    if is_zero(t[-1]):
        raise PreconditionError("t_{n-1} = 0: psi_t does not generate")


def _quotient_labels(params: CyclicParams, k: int) -> list[tuple[int, int]]:
    return graded_basis(NABLA, k + 1, params.n)[1:]


def build_Fk(params: CyclicParams, t: Sequence, k: int) -> GradedMatrix:
    """(n+k) x (n+k) matrix of x followed by the projection along xi^{-(k+1)} psi_t.

    Unit diagonal; superdiagonal entry at column r is
    ``n + k - r + c_{k+1} - c_{r+1}``; column 0 additionally carries
    ``-(n + k + c_{k+1} - c_1) t_{n-2-r} / t_{n-1}`` in row r.
    """
    n = params.n
    if not 1 - n <= k < 0:
        raise PreconditionError("F_k is defined for 1-n <= k < 0")
    _check_t(params, t)
    size = n + k
    zero = params.zero()
    rows = [[zero] * size for _ in range(size)]
    head = n + k + params.delta(k + 1, 1)
    for r in range(size):
        rows[r][r] = zero + 1
        rows[r][0] = rows[r][0] - qdiv(head * t[n - 2 - r], t[n - 1])
        if r >= 1:
            rows[r - 1][r] = n + k - r + params.delta(k + 1, r + 1)
    return GradedMatrix(rows, _quotient_labels(params, k), graded_basis(NABLA, k, n))


def composed_Dk(params: CyclicParams, k: int) -> GradedMatrix:
    """D_k read off from the x-action on M."""
    return operator_matrix(NABLA, k, params, lambda v: act_nabla("x", v, params), 1)


def composed_Fk(params: CyclicParams, t: Sequence, k: int) -> GradedMatrix:
    """F_k from the x-action on M and an explicit projection.

    The quotient of M_{k+1} by the line through ``w = xi^{-(k+1)} psi_t`` is
    identified with the span of all basis vectors but the first, using that
    ``w`` has nonzero first coordinate when ``t_{n-1} != 0``.
    """
    n = params.n
    if not 1 - n <= k < 0:
        raise PreconditionError("F_k is defined for 1-n <= k < 0")
    _check_t(params, t)
    zero = params.zero()
    w = psi_vector(t, n)
    for _ in range(-(k + 1)):
        w = act_nabla("xi", w, params)
    target = graded_basis(NABLA, k + 1, n)
    w_coords = coordinates(w, target, zero)
    lead = w_coords[0]
    source = graded_basis(NABLA, k, n)
    cols = []
    for (i, j) in source:
        u = coordinates(act_nabla("x", basis_vector(NABLA, n, i, j), params), target, zero)
        f = qdiv(u[0], lead)
        cols.append([a - f * b for a, b in zip(u[1:], w_coords[1:])])
    rows = [[cols[c][r] for c in range(len(source))] for r in range(len(target) - 1)]
    return GradedMatrix(rows, target[1:], source)


@dataclass
class DkVerdict:
    nonsingular: bool
    witnesses: list[tuple[int, int, int]]
    scan_bound: int
    scan_singular: list[int]

    def __bool__(self) -> bool:
        return self.nonsingular


def dk_all_nonsingular(params: CyclicParams, K: int | None = None, tol: float = DEFAULT_TOL) -> DkVerdict:
    """Finite criterion for D_k, k >= 0, cross-checked by a determinant scan on [0, K]."""
    n = params.n
    if K is None:
        K = 3 * n
    witnesses = singular_degrees(params, tol)
    predicted = sorted({k for k, _i, _j in witnesses if k <= K})
    scanned = [k for k in range(K + 1) if is_zero(build_Dk(params, k).det(), tol)]
    if scanned != predicted:
        raise ConsistencyError(f"D_k criterion predicts {predicted}, determinant scan finds {scanned}")
    nonsingular = not witnesses
    if nonsingular != in_F(params, tol).in_F:
        raise ConsistencyError("D_k criterion disagrees with membership in F")
    return DkVerdict(nonsingular, witnesses, K, scanned)


@dataclass
class GenerationReport:
    generates: bool
    matrix_route: bool
    brute_route: bool
    window: int
    singular_F: list[int] = field(default_factory=list)
    singular_D: list[int] = field(default_factory=list)
    deficient_degrees: list[int] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.generates


def generation_report(
    params: CyclicParams,
    t: Sequence | None = None,
    K: int | None = None,
    tol: float = DEFAULT_TOL,
    exhaustive: bool = True,
) -> GenerationReport:
    """Decide whether psi_t generates M, by the matrix criterion and by brute force.

    The brute-force route compares the span of ``x^i xi^j psi_t`` with M_k in
    every degree up to ``max(K, last singular D_k + 1)`` so both routes see
    the same obstructions.  With ``exhaustive=False`` it stops at the first
    deficient degree (the verdict is the same, ``deficient_degrees`` is cut
    short).
    """
    n = params.n
    if t is None:
        t = default_t(n)
    if K is None:
        K = 3 * n
    verdict = dk_all_nonsingular(params, K, tol)
    window = max([K] + [k + 1 for k, _i, _j in verdict.witnesses])
    singular_F: list[int] = []
    if is_zero(t[-1], tol):
        matrix_route = False
    else:
        singular_F = [k for k in range(1 - n, 0) if is_zero(build_Fk(params, t, k).det(), tol)]
        matrix_route = not singular_F and verdict.nonsingular
    zero = params.zero()
    deficient = []
    for k, images in psi_orbit(params, t, window, scaled=False):
        target = graded_basis(NABLA, k, n)
        rows = [coordinates(v, target, zero) for v in images.values()]
        if rank(rows, tol) < len(target):
            deficient.append(k)
            if not exhaustive:
                break
    brute_route = not deficient
    if matrix_route != brute_route:
        raise ConsistencyError(
            f"generation: matrix route says {matrix_route}, span computation says {brute_route}"
        )
    return GenerationReport(
        matrix_route, matrix_route, brute_route, window, singular_F, verdict.scan_singular, deficient
    )


def generation_check(params: CyclicParams, t: Sequence | None = None, K: int | None = None) -> bool:
    return generation_report(params, t, K, exhaustive=False).generates
