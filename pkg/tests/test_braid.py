import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hombraid.braid import (BraidRep, BraidWord, DimensionCapError, MissingInverseError, build_braid_generators,
                            check_braid_relations, evaluate_braid_word, specialize_candidate, specialize_rep)
from hombraid.homalg import build_B_alpha, sl2_lambda
from hombraid.hybe import HybeCandidate, tau_alpha
from hombraid.linalg import Matrix
from hombraid.report import InvariantError
from hombraid.scalar import lam
from corpus import passing_candidates
from strategies import nonzero_rationals

l = lam()
TAU_L = tau_alpha(Matrix([[l, 1], [0, 2]]))
REP3 = build_braid_generators(TAU_L, 3)


def words(n, max_size=8):
    letters = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(letters, max_size=max_size).map(lambda xs: BraidWord(n, tuple(xs)))


@pytest.mark.parametrize("name", sorted(passing_candidates()))
@pytest.mark.parametrize("n", [3, 4])
def test_relations_on_every_solution(name, n):
    c = passing_candidates()[name]
    assert check_braid_relations(build_braid_generators(c, n)).passed


@given(words(3), words(3))
def test_word_evaluation_is_a_morphism(u, v):
    assert evaluate_braid_word(REP3, u * v) == evaluate_braid_word(REP3, u) @ evaluate_braid_word(REP3, v)


@given(words(3))
def test_word_times_inverse_is_identity(w):
    assert evaluate_braid_word(REP3, w * w.inverse()) == Matrix.identity(REP3.size)


@settings(max_examples=6)
@given(nonzero_rationals)
def test_specialization_commutes_with_construction(c):
    rep = build_braid_generators(TAU_L, 3)
    direct = build_braid_generators(specialize_candidate(TAU_L, c), 3)
    assert specialize_rep(rep, c).generators == direct.generators
    assert specialize_rep(rep, c).inverses == direct.inverses


def test_specialize_rejects_zero():
    with pytest.raises(ValueError):
        specialize_rep(REP3, 0)


def test_cap():
    with pytest.raises(DimensionCapError):
        build_braid_generators(TAU_L, 14)
    with pytest.raises(DimensionCapError):
        build_braid_generators(TAU_L, 3, cap=7)
    assert build_braid_generators(TAU_L, 3, cap=8).size == 8


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("HOMBRAID_CAP", "4")
    with pytest.raises(DimensionCapError):
        build_braid_generators(TAU_L, 3)


def test_two_strands_have_no_relations():
    rep = build_braid_generators(TAU_L, 2)
    report = check_braid_relations(rep)
    assert [c.name for c in report.checks] == ["inverses"]


def test_missing_inverses():
    rep = build_braid_generators(tau_alpha(Matrix([[1, 1], [0, 0]])), 3)
    assert rep.inverses is None and rep.note
    assert check_braid_relations(rep).passed
    evaluate_braid_word(rep, [1, 2, 1])
    with pytest.raises(MissingInverseError):
        evaluate_braid_word(rep, [1, -2])


def test_non_solution_rejected():
    with pytest.raises(InvariantError):
        build_braid_generators(HybeCandidate(Matrix.diag([1, 1, 1, 2]), Matrix.diag([1, 3])), 3)


def test_word_validation():
    with pytest.raises(ValueError):
        BraidWord(3, (3,))
    with pytest.raises(ValueError):
        BraidWord(3, (0,))
    with pytest.raises(ValueError):
        BraidWord(1)
    assert BraidWord.parse(4, "1 -3 2").letters == (1, -3, 2)
    assert BraidWord.parse(4, "").letters == ()


def test_rep_shape_validation():
    with pytest.raises(ValueError):
        BraidRep(3, 2, (Matrix.identity(8),))


def test_braid_relation_words_agree():
    rep = build_braid_generators(build_B_alpha(sl2_lambda()), 3)
    assert evaluate_braid_word(rep, [1, 2, 1]) == evaluate_braid_word(rep, [2, 1, 2])
    assert evaluate_braid_word(rep, [1, -1]) == Matrix.identity(64)
