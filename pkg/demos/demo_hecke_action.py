"""
The Hecke operator on Delta
===========================

``eta = s exp((2 pi i / n) eu)`` acts on each graded piece of Delta.  It
satisfies the cyclotomic Hecke relation and commutes with the algebra.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from cherednik import CyclicParams, check_annihilation, check_commutation, eigenvalue_on_standard, eta_matrix, hecke_poly

np.set_printoptions(precision=4, suppress=True)

# %%
# The roots of the Hecke polynomial
# ---------------------------------

p = CyclicParams.exact(2, [Fraction(1, 2), 0])
print("roots:", hecke_poly(p).roots)

# %%
# eta is triangular with those roots on its diagonal

print("eta_0 =\n", eta_matrix(p, 0))

# %%
# Relations hold for every c, inside F or not, exact or complex

for q in (p, CyclicParams.exact(2, [-1, 0]), CyclicParams.floating(3, [0.3 + 0.7j, -1.2, 0])):
    print(f"c = {q.c}: annihilation {check_annihilation(q):.1e}, commutation {check_commutation(q):.1e}")

# %%
# A perturbed eta fails, which shows the check can fail

print("perturbed commutation residual:", check_commutation(p, perturb=1e-3))

# %%
# Eigenvalues on the standard pieces (semisimple c)

for j in (1, 2):
    print(f"j = {j}: {eigenvalue_on_standard(p, j):.6f}")
