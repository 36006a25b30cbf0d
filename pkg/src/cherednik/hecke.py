"""The cyclotomic Hecke algebra and its action on Delta.

The Hecke algebra is ``C[T] / prod_{j=1}^n (T - q^-j q_j^-1)`` with
``q_j = exp(2 pi i c_j / n)``.  The operator ``eta = s exp((2 pi i / n) eu)``
acts on each graded piece of Delta by ``eta_k = q^-k expm((2 pi i / n) Eu_k)``
and should satisfy that relation and commute with x, s and xi.

Convention: T has roots ``q^-j exp(-2 pi i k_j)`` (``k_j = c_j / n``); some
references use the inverse generator, whose roots are the reciprocals.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import reduce

import numpy as np
from scipy.linalg import expm, null_space

from .algebra import CyclicParams
from .criteria import is_semisimple
from .modules import DELTA, eu_matrix, generator_matrix, graded_basis
from .scalars import DEFAULT_TOL, NumericError, PreconditionError, to_complex

__all__ = [
    "CONVENTION",
    "HeckePoly",
    "check_annihilation",
    "check_commutation",
    "eigenvalue_on_standard",
    "eta_matrix",
    "eu_matrix_complex",
    "hecke_poly",
]

CONVENTION = "T annihilated by prod_j (T - q^-j exp(-2 pi i c_j / n)); inverse-generator roots are the reciprocals"


def _q(n: int, m: float) -> complex:
    return cmath.exp(2j * math.pi * m / n)


@dataclass
class HeckePoly:
    roots: np.ndarray
    coeffs: np.ndarray  # highest degree first, monic

    def __call__(self, T: np.ndarray) -> np.ndarray:
        """Evaluate the product form at a square matrix."""
        eye = np.eye(T.shape[0], dtype=complex)
        return reduce(lambda acc, r: acc @ (T - r * eye), self.roots, eye)


def hecke_roots(params: CyclicParams) -> np.ndarray:
    n = params.n
    return np.array([_q(n, -j) * _q(n, -to_complex(params.ci(j))) for j in range(1, n + 1)])


def hecke_poly(params: CyclicParams) -> HeckePoly:
    roots = hecke_roots(params)
    return HeckePoly(roots, np.poly(roots))


def eu_matrix_complex(params: CyclicParams, k: int) -> np.ndarray:
    return eu_matrix(params, k).to_numpy()


def _finite(mat: np.ndarray) -> np.ndarray:
    if not np.all(np.isfinite(mat)):
        raise NumericError("non-finite entries in eta")
    return mat


def eta_matrix(params: CyclicParams, k: int) -> np.ndarray:
    """q^-k expm((2 pi i / n) Eu_k) on Delta_k (Pade scaling and squaring)."""
    n = params.n
    if k < 1 - n:
        raise PreconditionError("Delta_k vanishes below degree 1-n")
    eu = eu_matrix_complex(params, k)
    return _finite(_q(n, -k) * expm((2j * math.pi / n) * eu))


def _generator_complex(params: CyclicParams, g: str, k: int) -> np.ndarray:
    return generator_matrix(DELTA, g, k, params).to_numpy()


def check_annihilation(params: CyclicParams, K: int | None = None) -> float:
    """max_k ||prod_j (eta_k - root_j)||_2 over 1-n <= k <= K."""
    n = params.n
    if K is None:
        K = 3 * n
    poly = hecke_poly(params)
    worst = 0.0
    for k in range(1 - n, K + 1):
        worst = max(worst, float(np.linalg.norm(poly(eta_matrix(params, k)), 2)))
    return worst


def check_commutation(params: CyclicParams, K: int | None = None, perturb: float = 0.0) -> float:
    """Largest residual of eta against the x, xi and s actions for degrees up to K.

    ``perturb`` adds a constant to the diagonal of every eta_k (a negative
    control: the residual must then be large).
    """
    n = params.n
    if K is None:
        K = 3 * n
    etas = {}

    def eta(k):
        if k not in etas:
            e = eta_matrix(params, k)
            etas[k] = e + perturb * np.diag(np.arange(1, e.shape[0] + 1)) if perturb else e
        return etas[k]

    worst = 0.0
    for k in range(1 - n, K):
        X = _generator_complex(params, "x", k)
        S = _generator_complex(params, "s", k)
        worst = max(worst, float(np.linalg.norm(eta(k + 1) @ X - X @ eta(k), 2)))
        worst = max(worst, float(np.linalg.norm(eta(k) @ S - S @ eta(k), 2)))
        if k - 1 >= 1 - n:
            Xi = _generator_complex(params, "xi", k)
            worst = max(worst, float(np.linalg.norm(eta(k - 1) @ Xi - Xi @ eta(k), 2)))
    return worst


def eigenvalue_on_standard(params: CyclicParams, j: int, tol: float = DEFAULT_TOL) -> complex:
    """eta-eigenvalue on the copy of Delta(E_j) inside Delta, read in degree 0.

    In degree 0 that copy is the eu-eigenline for ``n - j - c_j`` (it starts in
    degree ``j - n`` with eigenvalue ``-c_j``).
    """
    n = params.n
    if not 1 <= j <= n:
        raise ValueError(f"j must lie in 1..{n}")
    if not is_semisimple(params, tol):
        raise PreconditionError("Delta only splits into standard modules in the semisimple case")
    eu = eu_matrix_complex(params, 0)
    lam = n - j - to_complex(params.ci(j))
    kernel = null_space(eu - lam * np.eye(eu.shape[0]), rcond=1e-10)
    if kernel.shape[1] != 1:
        raise PreconditionError("eu eigenvalue is not simple")
    v = kernel[:, 0]
    w = eta_matrix(params, 0) @ v
    return complex(np.vdot(v, w) / np.vdot(v, v))


def eta_diagonal(params: CyclicParams, k: int) -> np.ndarray:
    return np.diag(eta_matrix(params, k))


def degree_dims(n: int, K: int) -> dict[int, int]:
    return {k: len(graded_basis(DELTA, k, n)) for k in range(1 - n, K + 1)}
