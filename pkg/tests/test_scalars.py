from __future__ import annotations

import cmath
import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from cherednik.scalars import (
    CycloElem,
    StructuralError,
    canon,
    cyclo_embed,
    cyclo_is_zero,
    cyclo_mul,
    cyclotomic_poly,
    field_normalize,
    is_zero,
    parse_complex,
    parse_rational,
    parse_scalar,
    qdiv,
    root_of_unity,
    scalar_to_str,
)

coeffs = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=1, max_size=6)


def test_canon_and_qdiv_stay_exact():
    assert canon(Fraction(4, 2)) == 2 and type(canon(Fraction(4, 2))) is int
    assert qdiv(1, 2) == Fraction(1, 2)
    assert type(qdiv(6, 3)) is int
    assert qdiv(1.0, 4) == 0.25


@pytest.mark.parametrize("text,value", [("3", 3), ("-3/6", Fraction(-1, 2)), (" 7 / 7 ", 1)])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1/0", "a", "1.5", "", "1//2"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@pytest.mark.parametrize(
    "text,value", [("0.3+0.7i", 0.3 + 0.7j), ("-2", -2), ("i", 1j), ("-1.5e1-2i", -15 - 2j), ("2j", 2j)]
)
def test_parse_complex(text, value):
    assert parse_complex(text) == value


@pytest.mark.parametrize("bad", ["1+", "nan", "inf", "1e999", "x"])
def test_parse_complex_rejects(bad):
    with pytest.raises(ValueError):
        parse_complex(bad)


@given(st.fractions(max_denominator=50))
def test_rational_text_round_trip(q):
    assert parse_scalar(scalar_to_str(q), "exact") == q


@given(st.complex_numbers(allow_nan=False, allow_infinity=False, max_magnitude=1e6))
def test_complex_text_round_trip(z):
    assert parse_scalar(scalar_to_str(z), "float") == z


def test_group_ring_examples():
    z2, z3, z4 = CycloElem.zeta(2), CycloElem.zeta(3), CycloElem.zeta(4)
    assert z2 * z2 == CycloElem([1, 0])
    assert (1 + z3) * (1 + z3 * z3) == CycloElem([2, 1, 1])
    assert z4.shift(1) * z4.shift(2) == z4
    with pytest.raises(StructuralError):
        cyclo_mul(z2, z3)


def test_embedding_examples():
    assert cmath.isclose(cyclo_embed(CycloElem.zeta(4)), 1j, abs_tol=1e-15)
    assert abs(cyclo_embed(1 + CycloElem.zeta(2))) < 1e-15
    z3 = CycloElem.zeta(3)
    assert cmath.isclose(cyclo_embed(z3 + z3 * z3), -1, abs_tol=1e-15)


def test_group_ring_zero_is_not_field_zero():
    assert cyclo_is_zero(CycloElem([0, 0, 0]))
    assert not cyclo_is_zero(1 + CycloElem.zeta(2))
    assert not cyclo_is_zero(1 - CycloElem.zeta(2))
    # 1 + zeta vanishes in the field Q(zeta_2) = Q though
    assert (1 + CycloElem.zeta(2)).is_zero_field()


@pytest.mark.parametrize("n", range(1, 25))
def test_cyclotomic_poly_matches_sympy(n):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_poly(n)) == [int(a) for a in expected]


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(st.just(n), st.lists(coeffs, min_size=2, max_size=2))))
def test_embedding_is_a_ring_map(data):
    n, (ca, cb) = data
    a = CycloElem((ca + [0] * n)[:n])
    b = CycloElem((cb + [0] * n)[:n])
    assert cmath.isclose((a * b).embed(), a.embed() * b.embed(), abs_tol=1e-9)
    assert cmath.isclose((a + b).embed(), a.embed() + b.embed(), abs_tol=1e-9)
    assert cmath.isclose(a.reduce().embed(), a.embed(), abs_tol=1e-9)
    assert a.is_zero_field() == (abs(a.embed()) < 1e-9)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8])
def test_root_of_unity(n):
    for k in range(-n, 2 * n):
        assert cmath.isclose(complex(field_normalize(CycloElem.zeta(n, k))), cmath.exp(2j * math.pi * k / n), abs_tol=1e-12)
        r = root_of_unity(n, k % n)
        assert cmath.isclose(complex(r) if not isinstance(r, CycloElem) else r.embed(), cmath.exp(2j * math.pi * k / n), abs_tol=1e-12)


def test_field_normalize_collapses_rationals():
    assert field_normalize(CycloElem([Fraction(1, 2), 0])) == Fraction(1, 2)
    assert field_normalize(CycloElem([1, 1, 1])) == 0  # 1 + z + z^2 = 0 in Q(zeta_3)
    assert is_zero(1e-12, 1e-9) and not is_zero(1e-6, 1e-9)
