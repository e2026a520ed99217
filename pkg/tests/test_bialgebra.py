import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hombraid import bialgebra as bi
from hombraid import fixtures
from hombraid.hybe import check_hybe
from hombraid.linalg import Matrix, permutation_tau
from hombraid.report import InvariantError
from strategies import rationals, small_ints

Z2 = bi.group_algebra_z2()
SW = bi.sweedler()


@pytest.mark.parametrize("H", [Z2, SW], ids=["z2", "sweedler"])
def test_bialgebra_axioms(H):
    assert bi.check_bialgebra(H).passed


def test_broken_counit_detected():
    H = bi.Bialgebra(Z2.mu, Z2.unit, Z2.delta, (1, -1))
    report = bi.check_bialgebra(H)
    assert not report.get("counit").passed


def test_z2_qt_structures():
    for qt in (bi.z2_trivial_R(), bi.z2_R()):
        assert bi.check_qt(Z2, qt).passed
        assert bi.check_qybe(Z2, qt.R).passed


def test_z2_perturbed_r_is_not_quasi_triangular():
    report = bi.check_qt(Z2, bi.z2_R(1))
    assert not report.passed
    assert not report.get("invertible").passed


def test_z2_qybe_holds_for_every_r():
    # H (x) H (x) H is commutative for a commutative H, so the QYBE is automatic
    for gg in (1, 0, 5):
        assert bi.check_qybe(Z2, bi.z2_R(gg).R).passed


@settings(max_examples=8)
@given(rationals)
def test_sweedler_family(a):
    qt = bi.sweedler_R(a)
    assert bi.check_qt(SW, qt).passed
    assert bi.check_qybe(SW, qt.R).passed


@pytest.mark.parametrize("index", [0, 1, 2, 5])
def test_sweedler_perturbation_breaks_qybe(index):
    R = list(bi.sweedler_R(1).R)
    R[index] += 1
    assert not bi.check_qybe(SW, R).get("qybe").passed


def test_qt_inverse():
    qt = bi.with_inverse(SW, bi.sweedler_R(2))
    one = SW.one(2)
    assert SW.multiply(2, qt.R, qt.R_inv) == one
    assert SW.multiply(2, qt.R_inv, qt.R) == one


def test_sign_module_b_r_is_signed_swap():
    c = bi.build_B_R(Z2, bi.z2_R(), bi.z2_sign_module())
    expected = Matrix.diag([1, 1, 1, -1]) @ permutation_tau(2)
    assert c.B == expected
    assert check_hybe(c).passed


def test_swap_alpha_rejected():
    M = bi.z2_sign_module(fixtures.SWAP)
    assert not bi.check_module_morphism(Z2, M).passed
    with pytest.raises(InvariantError):
        bi.build_B_R(Z2, bi.z2_R(), M)


def test_b_r_inverse():
    M = bi.z2_sign_module()
    c = bi.build_B_R(Z2, bi.z2_R(), M)
    assert bi.B_R_inverse(Z2, bi.z2_R(), M) @ c.B == Matrix.identity(4)


@settings(max_examples=10)
@given(st.lists(small_ints, min_size=4, max_size=4))
def test_sweedler_b_r_with_right_multiplication(h):
    M = bi.regular_module(SW, bi.right_multiplication(SW, h))
    assert bi.check_module_morphism(SW, M).passed
    assert check_hybe(bi.build_B_R(SW, bi.sweedler_R(1), M)).passed


def test_dual_qt():
    dqt = bi.z2_dual_R()
    assert bi.check_dual_qt(Z2, dqt).passed
    R_inv = bi.dual_qt_inverse(Z2, dqt.R)
    assert R_inv == dqt.R  # (-1)^(ab) is its own convolution inverse


def test_dual_qt_rejects_non_form():
    report = bi.check_dual_qt(Z2, bi.DualQTStructure(Matrix([[1, 1], [1, 2]])))
    assert not report.passed


def test_comodule_axioms():
    for alpha in (None, fixtures.ALPHA_23):
        C = bi.z2_comodule(alpha)
        assert bi.check_comodule(Z2, C).passed
        assert bi.check_comodule_morphism(Z2, C).passed
    assert not bi.check_comodule_morphism(Z2, bi.z2_comodule(fixtures.SWAP)).passed


def test_counit_form_gives_tau():
    c = bi.build_B_dual_R(Z2, bi.counit_form(Z2), bi.z2_comodule())
    assert c.B == permutation_tau(2)


@pytest.mark.parametrize("alpha", [None, fixtures.ALPHA_23])
def test_duality_cross_check(alpha):
    b_r = bi.build_B_R(Z2, bi.z2_R(), bi.z2_sign_module(alpha))
    b_dual = bi.build_B_dual_R(Z2, bi.z2_dual_R(), bi.z2_comodule(alpha))
    assert b_r == b_dual
    assert check_hybe(b_dual).passed
