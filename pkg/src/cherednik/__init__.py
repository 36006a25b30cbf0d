"""Exact computations with the rational Cherednik algebra of a cyclic group.

The main entry points:

* :mod:`cherednik.algebra` -- PBW normal ordering, ``eu`` and the idempotents;
* :mod:`cherednik.modules` -- the standard module ``Delta`` and the module ``M``;
* :mod:`cherednik.criteria` -- the good parameter set F and generation of ``M``;
* :mod:`cherednik.homspace` -- singular vectors and the map ``Delta -> M``;
* :mod:`cherednik.endo` -- endomorphisms of ``Delta``;
* :mod:`cherednik.hecke` -- the Hecke algebra action on ``Delta``.
"""

from .algebra import CyclicParams, PBWElement, eu_element, normal_order, xi_pow_x_identity
from .criteria import (
    build_Dk,
    build_Fk,
    dk_all_nonsingular,
    generation_check,
    good_translate,
    in_F,
    is_semisimple,
)
from .endo import critical_ks, det_formula, end_dim, xi_n_matrix
from .hecke import check_annihilation, check_commutation, eigenvalue_on_standard, eta_matrix, hecke_poly
from .homspace import delta_to_nabla_hom, lift_psi, verify_singular
from .modules import DELTA, NABLA, ModVector, act_delta, act_nabla, eu_matrix, graded_basis
from .scalars import CycloElem

__version__ = "0.1.0"

__all__ = [
    "CycloElem",
    "CyclicParams",
    "DELTA",
    "ModVector",
    "NABLA",
    "PBWElement",
    "act_delta",
    "act_nabla",
    "build_Dk",
    "build_Fk",
    "check_annihilation",
    "check_commutation",
    "critical_ks",
    "delta_to_nabla_hom",
    "det_formula",
    "dk_all_nonsingular",
    "eigenvalue_on_standard",
    "end_dim",
    "eta_matrix",
    "eu_element",
    "eu_matrix",
    "generation_check",
    "good_translate",
    "graded_basis",
    "hecke_poly",
    "in_F",
    "is_semisimple",
    "lift_psi",
    "normal_order",
    "verify_singular",
    "xi_n_matrix",
    "xi_pow_x_identity",
]
