from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from cherednik.linalg import GradedMatrix, det, nullspace, rank, restrict_scalars
from cherednik.scalars import CycloElem

entry = st.fractions(min_value=-6, max_value=6, max_denominator=5)


def matrices(min_side=1, max_side=5, square=False):
    def build(shape):
        r, c = shape
        return st.lists(st.lists(entry, min_size=c, max_size=c), min_size=r, max_size=r)

    sides = st.integers(min_side, max_side)
    shapes = sides.map(lambda s: (s, s)) if square else st.tuples(sides, sides)
    return shapes.flatmap(build)


def low_rank(rows):
    """Make the last row a combination of the others so rank deficiency is common."""
    if len(rows) >= 2:
        rows = rows[:-1] + [[a - 2 * b for a, b in zip(rows[0], rows[1])]]
    return rows


@given(matrices(square=True), st.booleans())
def test_det_matches_sympy(rows, degenerate):
    if degenerate:
        rows = low_rank(rows)
    assert det(rows) == sympy.Matrix(rows).det()


@given(matrices(), st.booleans())
def test_rank_and_nullspace_match_sympy(rows, degenerate):
    if degenerate:
        rows = low_rank(rows)
    m = sympy.Matrix(rows)
    assert rank(rows) == m.rank()
    kernel = nullspace(rows)
    assert len(kernel) == len(rows[0]) - m.rank()
    for v in kernel:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in rows)


def test_det_examples():
    assert det([[2, 0], [1, 1]]) == 2
    assert det([[2, 0], [1, 0]]) == 0
    assert det([]) == 1
    with pytest.raises(ValueError):
        det([[1, 2]])


def test_float_rank_uses_tolerance():
    rows = [[1.0, 2.0], [2.0, 4.0 + 1e-12]]
    assert rank(rows, tol=1e-9) == 1
    assert rank(rows, tol=1e-15) == 2


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_cyclotomic_rank_agrees_with_numeric(n):
    z = CycloElem.zeta(n)
    one = CycloElem.scalar(n, 1)
    rows = [
        [one, z, z * z],
        [z, z * z, z * z * z],  # z times the first row
        [one + z, one, 2 * one],
    ]
    numeric = np.array([[a.embed() for a in row] for row in rows])
    assert rank(rows) == np.linalg.matrix_rank(numeric) == 2
    # restriction of scalars multiplies the rank by phi(n)
    phi = sympy.totient(n)
    assert rank(restrict_scalars(rows, n)) == 2 * phi


def test_graded_matrix_helpers():
    m = GradedMatrix([[1, 3], [0, 1]], [(1, 0), (0, 1)], [(1, 0), (0, 1)])
    assert m.is_unit_upper_triangular() and not m.is_lower_triangular()
    assert m.shape == (2, 2) and m.diagonal() == [1, 1]
    assert m.rank() == 2 and m.nullity() == 0
    assert m.to_json()["rows"] == [["1", "3"], ["0", "1"]]
    assert m == GradedMatrix([[1, 3], [0, 1]])
    assert np.allclose(m.to_numpy(), [[1, 3], [0, 1]])


@given(matrices(square=True), st.booleans())
def test_triangular_det_matches_sympy(rows, lower):
    tri = [[a if (j <= i if lower else j >= i) else 0 for j, a in enumerate(row)] for i, row in enumerate(rows)]
    assert det(tri) == sympy.Matrix(tri).det()
