from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cherednik.algebra import CyclicParams
from cherednik.modules import (
    DELTA,
    NABLA,
    ModVector,
    act_delta,
    act_nabla,
    basis_vector,
    composed_eu_matrix,
    coordinates,
    degree_of,
    eu_matrix,
    generator_matrix,
    graded_basis,
)

from conftest import params_st, relations_hold

tags = st.sampled_from([DELTA, NABLA])


@st.composite
def vectors(draw, n, tag):
    size = draw(st.integers(1, 4))
    entries = {}
    for _ in range(size):
        key = (draw(st.integers(0, 3 * n)), draw(st.integers(0, n - 1)))
        entries[key] = draw(st.fractions(min_value=-9, max_value=9, max_denominator=5))
    return ModVector(tag, n, entries)


@given(params_st(1, 5), tags, st.data())
def test_defining_relations_exact(p, tag, data):
    assert relations_hold(p, data.draw(vectors(p.n, tag)))


@pytest.mark.parametrize("tag", [DELTA, NABLA])
@pytest.mark.parametrize("c", [[0.3 + 0.7j, 0], [1.5, -2j, 0], [0.1, 0.2, 0.3, 0]])
def test_defining_relations_numeric_matrices(tag, c):
    """Relations checked on complex graded matrices, with eps built from numpy powers of S."""
    n = len(c)
    p = CyclicParams.floating(n, c)
    q = cmath.exp(2j * math.pi / n)
    for k in range(1 - n, 3 * n):
        X = generator_matrix(tag, "x", k, p).to_numpy()
        Xi = generator_matrix(tag, "xi", k + 1, p).to_numpy()
        S_k = generator_matrix(tag, "s", k, p).to_numpy()
        S_k1 = generator_matrix(tag, "s", k + 1, p).to_numpy()
        assert np.allclose(S_k1 @ X, X @ S_k / q)
        assert np.allclose(Xi @ S_k1, S_k @ Xi / q)
        comm = Xi @ X
        if k > 1 - n:
            Xi_k = generator_matrix(tag, "xi", k, p).to_numpy()
            X_km1 = generator_matrix(tag, "x", k - 1, p).to_numpy()
            comm = comm - X_km1 @ Xi_k
        dim = S_k.shape[0]
        rhs = np.eye(dim, dtype=complex)
        for kk in range(n):
            E = sum(q ** (kk * j) * np.linalg.matrix_power(S_k, j) for j in range(n)) / n
            rhs = rhs + (p.delta(kk + 1, kk)) * E
        assert np.allclose(comm, rhs, atol=1e-9)


def test_delta_action_examples():
    c1 = Fraction(5, 3)
    p = CyclicParams.exact(2, [c1, 0])
    assert act_delta("xi", basis_vector(DELTA, 2, 0, 0), p) == basis_vector(DELTA, 2, 0, 1)
    expected = ModVector(DELTA, 2, {(1, 1): 1, (0, 0): 1 + c1})
    assert act_delta("xi", basis_vector(DELTA, 2, 1, 0), p) == expected
    assert act_delta("x", basis_vector(DELTA, 2, 3, 1), p) == basis_vector(DELTA, 2, 4, 1)
    assert act_delta("xi", basis_vector(DELTA, 2, 0, 1), p).is_zero()


def test_nabla_action_examples():
    p = CyclicParams.exact(2, [0, 0])
    for j in range(2):
        assert act_nabla("xi", basis_vector(NABLA, 2, 0, j), p).is_zero()
    assert act_nabla("x", basis_vector(NABLA, 2, 0, 0), p) == ModVector(NABLA, 2, {(0, 1): 1, (1, 0): 1})
    q = CyclicParams.exact(3, [Fraction(1, 2), 7, 0])
    for i in range(5):
        for j in range(3):
            if (i + j + 1) % 3 == 0:
                v = basis_vector(NABLA, 3, i, j)
                assert act_nabla("s", v, q) == v


def test_graded_basis_examples():
    assert graded_basis(NABLA, -2, 3) == [(0, 0)]
    assert graded_basis(DELTA, 0, 2) == [(1, 1), (0, 0)]
    assert graded_basis(NABLA, 1, 2) == [(2, 0), (1, 1)]
    assert graded_basis(DELTA, -3, 3) == [] == graded_basis(NABLA, -5, 3)


@given(st.integers(1, 6), st.integers(-8, 12), tags)
def test_graded_dimensions(n, k, tag):
    basis = graded_basis(tag, k, n)
    assert len(basis) == max(0, min(n, n + k))
    assert all(degree_of(tag, i, j, n) == k for i, j in basis)


def test_coordinates_rejects_foreign_components():
    v = basis_vector(NABLA, 2, 5, 0)
    with pytest.raises(ValueError):
        coordinates(v, graded_basis(NABLA, 0, 2))
    with pytest.raises(ValueError):
        ModVector(DELTA, 2, {(0, 2): 1})


def test_eu_matrix_examples():
    assert eu_matrix(CyclicParams.exact(2, [0, 0]), 0).rows == [[1, 1], [0, 0]]
    assert eu_matrix(CyclicParams.exact(2, [1, 0]), -1).rows == [[-1]]
    assert eu_matrix(CyclicParams.exact(3, [0, 0, 0]), 2).rows == [[4, 1, 0], [0, 3, 1], [0, 0, 2]]


@given(params_st(1, 5), st.integers(-4, 8))
def test_eu_formula_matches_composition(p, k):
    assert eu_matrix(p, k) == composed_eu_matrix(p, k)


@given(params_st(2, 4), st.integers(-3, 6))
def test_eu_commutators_on_delta(p, k):
    """[eu, x] = x and [eu, xi] = -xi read through the graded pieces of Delta."""
    k = max(k, 1 - p.n)
    X = generator_matrix(DELTA, "x", k, p).to_numpy()
    Xi = generator_matrix(DELTA, "xi", k + 1, p).to_numpy()
    E_k = eu_matrix(p, k).to_numpy()
    E_k1 = eu_matrix(p, k + 1).to_numpy()
    assert np.allclose(E_k1 @ X - X @ E_k, X)
    assert np.allclose(E_k @ Xi - Xi @ E_k1, -Xi)
