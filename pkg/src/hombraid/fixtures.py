"""The built-in fixture corpus, as JSON objects keyed by file stem.

``EXPECTED`` lists the CLI invocations each fixture is meant for, with the
exit code a correct implementation returns.
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from . import bialgebra as bi
from . import homalg
from .homalg import HomAssociativeAlgebra, HomLieAlgebra
from .hybe import HomModule, HybeCandidate, tau_alpha
from .linalg import Matrix, Tensor3
from .scalar import ONE, lam
from .serialize import (algebra_to_json, bialgebra_to_json, candidate_to_json, comodule_to_json,
                        hom_module_to_json, module_to_json, write_json)


def sl2_broken() -> HomLieAlgebra:
    """sl(2)_l with ``[e, f]`` replaced by ``e``; still skew, fails the Hom-Jacobi identity."""
    L = homalg.sl2_lambda()
    c = [[list(row) for row in plane] for plane in L.bracket.entries]
    c[0][1][2] = c[0][2][1] = 0
    c[1][1][2], c[1][2][1] = ONE, -ONE
    return HomLieAlgebra(Tensor3(c), L.alpha, L.basis)


def upper_triangular_twisted() -> HomAssociativeAlgebra:
    """Upper-triangular 2x2 matrices twisted by ``E12 -> l E12``."""
    return homalg.yau_twist_associative(homalg.upper_triangular(), Matrix.diag([1, lam(), 1]))


def upper_triangular_broken() -> HomAssociativeAlgebra:
    """The untwisted product paired with ``E12 -> 2 E12``."""
    A = homalg.upper_triangular()
    return HomAssociativeAlgebra(A.mu, Matrix.diag([1, 2, 1]), A.basis)


def abelian_hom_lie() -> HomLieAlgebra:
    return homalg.abelian(2, Matrix([[1, 1], [0, 2]]))


def hybe_broken() -> HybeCandidate:
    """Commutes with ``alpha (x) alpha`` but fails the HYBE on ``e0 (x) e1 (x) e1``."""
    return HybeCandidate(Matrix.diag([1, 1, 1, 2]), Matrix.diag([1, 3]))


def morphism_broken() -> HybeCandidate:
    return HybeCandidate(Matrix.diag([1, 2, 3, 4]), Matrix([[1, 1], [0, 1]]))


ALPHA_23 = Matrix.diag([2, 3])
SWAP = Matrix([[0, 1], [1, 0]])


def corpus() -> dict[str, dict]:
    z2 = bi.group_algebra_z2()
    z2_plain = bialgebra_to_json(z2, bi.z2_trivial_R())
    z2_qt = bialgebra_to_json(z2, bi.z2_R())
    z2_dual = bialgebra_to_json(z2, dual=bi.z2_dual_R())
    sw = bi.sweedler()
    sw_qt = bialgebra_to_json(sw, bi.sweedler_R(1))
    perturbed = list(bi.sweedler_R(1).R)
    perturbed[0] += 1
    g = [0, 1, 0, 0]
    sl2_l = homalg.sl2_lambda()
    return {
        # Hom-Lie and Hom-associative algebras
        "sl2_lambda": algebra_to_json(sl2_l),
        "sl2": algebra_to_json(homalg.sl2_lambda(1)),
        "sl2_broken": algebra_to_json(sl2_broken()),
        "abelian_hom_lie": algebra_to_json(abelian_hom_lie()),
        "gl2": algebra_to_json(homalg.gl2()),
        "upper_triangular_twisted": algebra_to_json(upper_triangular_twisted()),
        "upper_triangular_broken": algebra_to_json(upper_triangular_broken()),
        "dual_numbers_twisted": algebra_to_json(
            homalg.yau_twist_associative(homalg.dual_numbers(), Matrix.diag([1, lam()]))),
        # bialgebras
        "z2_bialgebra": z2_plain,
        "z2_qt": z2_qt,
        "z2_qt_perturbed": bialgebra_to_json(z2, bi.z2_R(1)),
        "z2_dual_qt": z2_dual,
        "sweedler_qt": sw_qt,
        "sweedler_qt_perturbed": bialgebra_to_json(sw, bi.QTStructure(tuple(perturbed))),
        # modules and comodules
        "z2_qt_module": module_to_json(bi.z2_sign_module(), z2_qt),
        "z2_qt_module_alpha23": module_to_json(bi.z2_sign_module(ALPHA_23), z2_qt),
        "z2_qt_module_swap": module_to_json(bi.z2_sign_module(SWAP), z2_qt),
        "z2_comodule": comodule_to_json(bi.z2_comodule(), z2_dual),
        "z2_comodule_alpha23": comodule_to_json(bi.z2_comodule(ALPHA_23), z2_dual),
        "z2_comodule_swap": comodule_to_json(bi.z2_comodule(SWAP), z2_dual),
        "sweedler_regular_module": module_to_json(
            bi.regular_module(sw, bi.right_multiplication(sw, g)), sw_qt),
        # Hom-modules and candidates
        "hom_module_id2": hom_module_to_json(HomModule(2, Matrix.identity(2))),
        "hom_module_lambda": hom_module_to_json(HomModule(2, Matrix.diag([lam(), Fraction(1, 2)]))),
        "tau_identity": candidate_to_json(tau_alpha(Matrix.identity(2))),
        "tau_alpha_lambda": candidate_to_json(tau_alpha(Matrix.diag([lam(), 1 / lam()]))),
        "tau_alpha_singular": candidate_to_json(tau_alpha(Matrix([[1, 1], [0, 0]]))),
        "sl2_balpha": candidate_to_json(homalg.build_B_alpha(sl2_l)),
        "sl2_bid": candidate_to_json(homalg.build_B_alpha(homalg.sl2())),
        "hybe_broken": candidate_to_json(hybe_broken()),
        "morphism_broken": candidate_to_json(morphism_broken()),
    }


# (argv tail, expected exit code); file names are relative to the corpus directory
EXPECTED: list[tuple[tuple[str, ...], int]] = [
    (("check", "hom-lie", "sl2_lambda.json"), 0),
    (("check", "hom-lie", "sl2.json"), 0),
    (("check", "hom-lie", "sl2_broken.json"), 1),
    (("check", "hom-lie", "abelian_hom_lie.json"), 0),
    (("check", "hom-lie", "gl2.json"), 0),
    (("check", "hom-assoc", "upper_triangular_twisted.json"), 0),
    (("check", "hom-assoc", "upper_triangular_broken.json"), 1),
    (("check", "hom-assoc", "dual_numbers_twisted.json"), 0),
    (("check", "hom-lie", "upper_triangular_twisted.json"), 2),
    (("check", "bialgebra", "z2_bialgebra.json"), 0),
    (("check", "bialgebra", "sweedler_qt.json"), 0),
    (("check", "qt", "z2_bialgebra.json"), 0),
    (("check", "qt", "z2_qt.json"), 0),
    (("check", "qt", "z2_qt_perturbed.json"), 1),
    (("check", "qt", "sweedler_qt.json"), 0),
    (("check", "qt", "z2_dual_qt.json"), 2),
    (("check", "qybe", "z2_qt.json"), 0),
    (("check", "qybe", "sweedler_qt.json"), 0),
    (("check", "qybe", "sweedler_qt_perturbed.json"), 1),
    (("check", "dual-qt", "z2_dual_qt.json"), 0),
    (("check", "module", "z2_qt_module.json"), 0),
    (("check", "module", "z2_qt_module_alpha23.json"), 0),
    (("check", "module", "z2_qt_module_swap.json"), 1),
    (("check", "module", "sweedler_regular_module.json"), 0),
    (("check", "comodule", "z2_comodule.json"), 0),
    (("check", "comodule", "z2_comodule_alpha23.json"), 0),
    (("check", "comodule", "z2_comodule_swap.json"), 1),
    (("check", "hybe", "tau_identity.json"), 0),
    (("check", "hybe", "tau_alpha_lambda.json"), 0),
    (("check", "hybe", "tau_alpha_singular.json"), 0),
    (("check", "hybe", "sl2_balpha.json"), 0),
    (("check", "hybe", "sl2_bid.json"), 0),
    (("check", "hybe", "hybe_broken.json"), 1),
    (("check", "hybe", "morphism_broken.json"), 1),
    (("check", "braid", "tau_alpha_lambda.json"), 0),
    (("check", "braid", "hybe_broken.json"), 1),
    (("build", "b-alpha", "sl2_lambda.json"), 0),
    (("build", "b-alpha", "gl2.json"), 0),
    (("build", "b-alpha", "sl2_broken.json"), 1),
    (("build", "b-alpha-inv", "sl2_lambda.json"), 0),
    (("build", "b-r", "z2_qt_module.json"), 0),
    (("build", "b-r", "z2_qt_module_alpha23.json"), 0),
    (("build", "b-r", "z2_qt_module_swap.json"), 1),
    (("build", "b-r", "sweedler_regular_module.json"), 0),
    (("build", "b-dual-r", "z2_comodule.json"), 0),
    (("build", "b-dual-r", "z2_comodule_alpha23.json"), 0),
    (("build", "b-dual-r", "z2_comodule_swap.json"), 1),
    (("build", "tau-alpha", "hom_module_id2.json"), 0),
    (("build", "tau-alpha", "hom_module_lambda.json"), 0),
    (("braid", "sl2_balpha.json", "--n", "3"), 0),
    (("braid", "sl2_balpha.json", "--n", "3", "--word", "1 -1"), 0),
    (("braid", "sl2_balpha.json", "--n", "3", "--lambda", "1", "--word", "1 2 1"), 0),
    (("braid", "tau_alpha_lambda.json", "--n", "4"), 0),
    (("braid", "tau_alpha_singular.json", "--n", "3", "--word", "1 -2"), 2),
    (("braid", "sl2_balpha.json", "--n", "8"), 2),
    (("braid", "sl2_balpha.json", "--n", "3", "--lambda", "0"), 2),
    (("braid", "hybe_broken.json", "--n", "3"), 1),
]


def write_corpus(out_dir) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, obj in corpus().items():
        path = out / f"{name}.json"
        write_json(path, obj)
        paths.append(path)
    return paths
