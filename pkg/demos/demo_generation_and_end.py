"""
Generation of M and endomorphisms of Delta
==========================================

For c in F the singular vector ``psi_t`` with ``t = (0, ..., 0, 1)``
generates M, the map ``Delta -> M`` is an isomorphism and
``dim End(Delta) = n``.  Outside F all three fail together.
"""

from __future__ import annotations

from cherednik import CyclicParams, in_F
from cherednik.criteria import generation_report
from cherednik.endo import direct_fixed_killed_dim, end_dim, xi_n_matrix
from cherednik.homspace import delta_to_nabla_hom

# %%
# One parameter inside F, one outside

for c in ([1, 0], [-1, 0]):
    p = CyclicParams.exact(2, c)
    gen = generation_report(p, K=6)
    hom = delta_to_nabla_hom(p, K=6)
    end = end_dim(p)
    print(f"c = {tuple(c)}: in F {in_F(p).in_F}, generates {gen.generates}, "
          f"iso {hom.iso} (first bad degree {hom.first_failure}), dim End {end.dim_end}")

# %%
# Where the extra endomorphisms live
# ----------------------------------
# Extra endomorphisms sit in degrees kn, in the kernel of ``xi^n``.  The
# determinant of ``xi^n`` has a product formula; the kernel can also be
# found without it.

p = CyclicParams.exact(2, [-1, 0])
m = xi_n_matrix(p, 1)
print("xi^2 on Delta_2:", m.rows, " det =", m.det())
print("kernel dimensions by degree:", {d: direct_fixed_killed_dim(p, d) for d in range(1, 9)})

# %%
# A sweep for n = 3
# -----------------

counts = {}
for a in range(-3, 4):
    for b in range(-3, 4):
        p = CyclicParams.exact(3, [a, b, 0])
        key = (in_F(p).in_F, end_dim(p).dim_end)
        counts[key] = counts.get(key, 0) + 1
for (member, dim), num in sorted(counts.items()):
    print(f"in F = {member!s:5}  dim End = {dim}: {num} parameters")
