"""Candidates shared by several test modules, built once per session."""
from __future__ import annotations

from functools import lru_cache

from hombraid import bialgebra as bi
from hombraid import fixtures, homalg
from hombraid.hybe import tau_alpha
from hombraid.linalg import Matrix
from hombraid.scalar import lam


@lru_cache(maxsize=None)
def passing_candidates() -> dict:
    """Every HYBE solution the fixture set produces."""
    z2, sw = bi.group_algebra_z2(), bi.sweedler()
    g = (0, 1, 0, 0)
    sl2_l = homalg.sl2_lambda()
    return {
        "tau_identity": tau_alpha(Matrix.identity(2)),
        "tau_alpha_lambda": tau_alpha(Matrix.diag([lam(), 1 / lam()])),
        "tau_alpha_singular": tau_alpha(Matrix([[1, 1], [0, 0]])),
        "sl2_balpha": homalg.build_B_alpha(sl2_l),
        "sl2_balpha_inv": homalg.invert_B_alpha(sl2_l),
        "sl2_bid": homalg.build_B_alpha(homalg.sl2()),
        "gl2_bid": homalg.build_B_alpha(homalg.gl2()),
        "abelian_balpha": homalg.build_B_alpha(fixtures.abelian_hom_lie()),
        "z2_b_r": bi.build_B_R(z2, bi.z2_R(), bi.z2_sign_module()),
        "z2_b_r_alpha23": bi.build_B_R(z2, bi.z2_R(), bi.z2_sign_module(fixtures.ALPHA_23)),
        "z2_b_dual_r": bi.build_B_dual_R(z2, bi.z2_dual_R(), bi.z2_comodule()),
        "z2_b_dual_r_alpha23": bi.build_B_dual_R(z2, bi.z2_dual_R(), bi.z2_comodule(fixtures.ALPHA_23)),
        "sweedler_b_r": bi.build_B_R(sw, bi.sweedler_R(1),
                                     bi.regular_module(sw, bi.right_multiplication(sw, g))),
    }
