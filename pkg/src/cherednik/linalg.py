"""Dense linear algebra over Q, Q(zeta) and C.

Exact rank and determinant use fraction-free (Bareiss) elimination on
integer matrices obtained by clearing denominators row by row (triangular
determinants are read off the diagonal); nullspaces
use plain ``Fraction`` Gauss-Jordan elimination.  Matrices with cyclotomic
entries are handled by restriction of scalars to Q.  Anything containing a
``complex`` goes through numpy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .scalars import (
    CycloElem,
    canon,
    cyclotomic_poly,
    field_normalize,
    is_zero,
    scalar_to_str,
    to_complex,
)

__all__ = [
    "GradedMatrix",
    "det",
    "is_exact_matrix",
    "nullspace",
    "rank",
    "restrict_scalars",
]

Matrix = Sequence[Sequence]


def _classify(rows: Matrix) -> str:
    """'rational', 'cyclo' (exact with cyclotomic entries) or 'float'."""
    kind = "rational"
    for row in rows:
        for a in row:
            t = type(a)
            if t is int or t is Fraction:
                continue
            if t is CycloElem:
                if not all(isinstance(b, (int, Fraction)) for b in a.coeffs):
                    return "float"
                kind = "cyclo"
            elif not isinstance(a, (int, Fraction)):
                return "float"
    return kind


def is_exact_matrix(rows: Matrix) -> bool:
    return _classify(rows) != "float"


def _integer_rows(rows: Matrix) -> tuple[list[list[int]], Fraction]:
    """Scale each row to integers; return the rows and the product of the scales."""
    out = []
    scale = Fraction(1)
    for row in rows:
        if all(type(a) is int for a in row):
            out.append(list(row))
            continue
        den = 1
        for a in row:
            if isinstance(a, Fraction) and a.denominator != 1:
                den = den * a.denominator // math.gcd(den, a.denominator)
        if den == 1:
            out.append([int(a) for a in row])
        else:
            out.append([int(a * den) for a in row])
            scale *= den
    return out, scale


def _bareiss(m: list[list[int]], want_det: bool) -> tuple[int, int]:
    """Fraction-free elimination in place; returns (rank, det-or-0)."""
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    prev = 1
    sign = 1
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            if want_det:
                return r, 0
            continue
        if pivot != r:
            m[r], m[pivot] = m[pivot], m[r]
            sign = -sign
        p = m[r][col]
        row_r = m[r]
        for i in range(r + 1, nrows):
            row_i = m[i]
            a = row_i[col]
            if a == 0 and prev == 1:
                # still must scale by p for fraction-free invariants
                for j in range(col + 1, ncols):
                    row_i[j] = row_i[j] * p
            else:
                for j in range(col + 1, ncols):
                    row_i[j] = (row_i[j] * p - a * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    if want_det:
        if r < nrows:
            return r, 0
        return r, sign * m[nrows - 1][ncols - 1]
    return r, 0


def _cyclo_block(a, n: int) -> list[list]:
    """Matrix (phi x phi, over Q) of multiplication by ``a`` on Q(zeta)."""
    phi = len(cyclotomic_poly(n)) - 1
    if not isinstance(a, CycloElem):
        return [[a if i == j else 0 for j in range(phi)] for i in range(phi)]
    cols = []
    for j in range(phi):
        prod = a.shift(j).reduce()
        cols.append(list(prod.coeffs[:phi]))
    return [[cols[j][i] for j in range(phi)] for i in range(phi)]


def restrict_scalars(rows: Matrix, n: int) -> list[list]:
    """Rational matrix of the Q-linear map underlying a matrix over Q(zeta_n)."""
    phi = len(cyclotomic_poly(n)) - 1
    out: list[list] = []
    for row in rows:
        blocks = [_cyclo_block(a, n) for a in row]
        for i in range(phi):
            out.append([b[i][j] for b in blocks for j in range(phi)])
    return out


def _cyclo_order(rows: Matrix) -> int:
    for row in rows:
        for a in row:
            if isinstance(a, CycloElem):
                return a.n
    raise ValueError("no cyclotomic entries")


def _numeric_rank(rows: Matrix, tol: float) -> int:
    arr = np.array([[to_complex(a) for a in row] for row in rows], dtype=complex)
    if arr.size == 0:
        return 0
    sv = np.linalg.svd(arr, compute_uv=False)
    return int(np.sum(sv > tol))


def rank(rows: Matrix, tol: float = 1e-9) -> int:
    """Rank over the field generated by the entries (tolerance only for floats)."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    kind = _classify(rows)
    if kind == "float":
        return _numeric_rank(rows, tol)
    if kind == "cyclo":
        n = _cyclo_order(rows)
        phi = len(cyclotomic_poly(n)) - 1
        r = rank(restrict_scalars(rows, n))
        assert r % phi == 0
        return r // phi
    ints, _ = _integer_rows(rows)
    return _bareiss(ints, want_det=False)[0]


def _is_triangular(rows: Matrix) -> bool:
    size = len(rows)
    lower = all(rows[i][j] == 0 for i in range(size) for j in range(i + 1, size))
    return lower or all(rows[i][j] == 0 for i in range(size) for j in range(i))


def det(rows: Matrix):
    """Exact determinant for rational matrices, numpy otherwise."""
    rows = [list(r) for r in rows]
    size = len(rows)
    if any(len(r) != size for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if size == 0:
        return 1
    kind = _classify(rows)
    if kind == "cyclo":
        raise NotImplementedError("exact determinants over Q(zeta) are not needed")
    if kind == "float":
        return complex(np.linalg.det(np.array([[to_complex(a) for a in r] for r in rows], dtype=complex)))
    if _is_triangular(rows):
        diag = [rows[i][i] for i in range(size)]
        if all(type(a) is int for a in diag):
            return math.prod(diag)
        return canon(math.prod(Fraction(a) for a in diag))
    ints, scale = _integer_rows(rows)
    _, d = _bareiss(ints, want_det=True)
    return canon(Fraction(d) / scale)


def nullspace(rows: Matrix, ncols: int | None = None) -> list[list]:
    """Basis of the right kernel of a rational matrix (Gauss-Jordan over Q)."""
    m = [[Fraction(a) for a in row] for row in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [a * inv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for i, pcol in enumerate(pivots):
            v[pcol] = -m[i][fcol]
        basis.append([canon(a) for a in v])
    return basis


@dataclass
class GradedMatrix:
    """A dense matrix with labelled rows and columns.

    Columns are images of the source basis vectors (``col_labels``) written
    in the target basis (``row_labels``).  Labels are ``(i, j)`` pairs for
    the ``v_{i,j}`` bases.
    """

    rows: list[list]
    row_labels: list[tuple] = field(default_factory=list)
    col_labels: list[tuple] = field(default_factory=list)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else len(self.col_labels))

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return all(
            is_zero(field_normalize(a - b)) for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def det(self):
        return det(self.rows)

    def rank(self, tol: float = 1e-9) -> int:
        return rank(self.rows, tol)

    def nullity(self, tol: float = 1e-9) -> int:
        return self.shape[1] - self.rank(tol)

    def to_numpy(self) -> np.ndarray:
        rows, cols = self.shape
        arr = np.zeros((rows, cols), dtype=complex)
        for i, row in enumerate(self.rows):
            for j, a in enumerate(row):
                arr[i, j] = to_complex(a)
        return arr

    def is_lower_triangular(self) -> bool:
        return all(is_zero(a) for i, row in enumerate(self.rows) for j, a in enumerate(row) if j > i)

    def is_upper_triangular(self) -> bool:
        return all(is_zero(a) for i, row in enumerate(self.rows) for j, a in enumerate(row) if j < i)

    def is_unit_upper_triangular(self) -> bool:
        return self.is_upper_triangular() and all(
            is_zero(field_normalize(self.rows[i][i] - 1)) for i in range(len(self.rows))
        )

    def diagonal(self) -> list:
        return [self.rows[i][i] for i in range(min(self.shape))]

    def to_json(self) -> dict:
        return {
            "rows": [[scalar_to_str(a) for a in row] for row in self.rows],
            "row_labels": [list(x) for x in self.row_labels],
            "col_labels": [list(x) for x in self.col_labels],
        }
