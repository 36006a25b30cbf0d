"""
Good parameters for Z/2 and Z/3
===============================

Which parameter vectors ``c`` lie in the set F, and what goes wrong
outside it.  Run with ``python demos/demo_good_parameters.py``.
"""

from __future__ import annotations

from fractions import Fraction

from cherednik import CyclicParams, build_Dk, good_translate, in_F
from cherednik.criteria import singular_degrees

# %%
# Scan a line of parameters for n = 2
# -----------------------------------
# For n = 2 the only constraint comes from the pair (1, 2): whenever
# ``c_1 - c_2`` is odd it must equal 1.  Non-integers never trigger it.

for c1 in [-3, -2, -1, 0, 1, 2, 3, Fraction(1, 2)]:
    p = CyclicParams.exact(2, [c1, 0])
    rep = in_F(p)
    print(f"c = ({c1}, 0): in F = {rep.in_F!s:5}  semisimple = {rep.semisimple!s:5}  witnesses = {rep.failing_pairs}")

# %%
# A singular D_k
# --------------
# Outside F some matrix of ``x: M_k -> M_{k+1}`` drops rank.  For
# ``c = (-1, 0)`` it happens immediately, in degree 0.

p = CyclicParams.exact(2, [-1, 0])
print("singular (k, i, j):", singular_degrees(p))
print("D_0 =", build_Dk(p, 0).rows, " det =", build_Dk(p, 0).det())

# %%
# Moving back into F
# ------------------
# Shifting each ``c_i`` by a multiple of n always reaches F.

for n, c in [(2, [-1, 0]), (3, [4, -2, 0]), (4, [5, -3, 2, 0])]:
    q = good_translate(CyclicParams.exact(n, c))
    print(f"n = {n}: {tuple(c)} -> {q.c}  in F: {in_F(q).in_F}")
