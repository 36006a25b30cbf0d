from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cherednik.algebra import CyclicParams
from cherednik.criteria import good_translate, in_F
from cherednik.modules import ModVector, act
from cherednik.scalars import CycloElem

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def random_rational(rng: random.Random, bound: int = 6, dens=(1, 2, 3, 4, 5, 7)) -> Fraction | int:
    value = Fraction(rng.randint(-bound * 7, bound * 7), rng.choice(dens))
    return value.numerator if value.denominator == 1 else value


def random_params(rng: random.Random, n: int, kind: str = "rational") -> CyclicParams:
    """kind: 'rational', 'integer', 'in_F' (integer, in F) or 'not_F' (integer, outside F)."""
    if kind == "rational":
        return CyclicParams.exact(n, [random_rational(rng) for _ in range(n - 1)] + [0])
    c = [rng.randint(-6, 6) for _ in range(n - 1)] + [0]
    p = CyclicParams.exact(n, c)
    if kind == "integer":
        return p
    if kind == "in_F":
        return good_translate(p)
    if kind == "not_F":
        while in_F(p).in_F:
            p = CyclicParams.exact(n, [rng.randint(-6, 6) for _ in range(n - 1)] + [0])
        return p
    raise ValueError(kind)


def eps_by_group_sum(k: int, v: ModVector, p: CyclicParams) -> ModVector:
    """eps_k v = (1/n) sum_j zeta^(kj) s^j v, using only the s-action."""
    n = p.n
    out = ModVector(v.tag, n)
    w = v
    for j in range(n):
        out = out + w.scale(CycloElem.zeta(n, k * j) / n)
        w = act("s", w, p)
    return out


def relations_hold(p: CyclicParams, v: ModVector) -> bool:
    n = p.n
    s_xi = act("s", act("xi", v, p), p)
    xi_s = act("xi", act("s", v, p), p)
    s_x = act("s", act("x", v, p), p)
    x_s = act("x", act("s", v, p), p)
    comm = act("xi", act("x", v, p), p) - act("x", act("xi", v, p), p)
    rhs = v
    for k in range(n):
        rhs = rhs + eps_by_group_sum(k, v, p).scale(p.delta(k + 1, k))
    return xi_s == s_xi.scale(p.q_pow(-1)) and s_x == x_s.scale(p.q_pow(-1)) and comm == rhs


rationals = st.fractions(min_value=-8, max_value=8, max_denominator=6)


@st.composite
def params_st(draw, min_n: int = 2, max_n: int = 4, integral: bool | None = None):
    n = draw(st.integers(min_n, max_n))
    if integral is None:
        integral = draw(st.booleans())
    elem = st.integers(-6, 6) if integral else rationals
    c = [draw(elem) for _ in range(n - 1)] + [0]
    return CyclicParams.exact(n, c)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)
