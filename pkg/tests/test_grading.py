import pytest

from posetlab import LabeledPoset, from_cover_relations
from posetlab.errors import NotParityConsistent
from posetlab.grading import (
    canonical_labeling,
    canonical_rank01,
    classify,
    delta_statistics,
    edge_signs_from_omega,
    is_canonical,
    parity_classification,
)

from test_poset import FIGURE1_COVERS, chain, figure1

FIGURE1_RANKS = {"1": -1, "2": -1, "3": 0, "4": 0, "5": 0,
                 "6": 0, "7": 0, "8": 1, "9": 1, "10": 1}


def figure1_labeled():
    return LabeledPoset.with_omega(figure1(), {str(i): i for i in range(1, 11)})


def test_figure1_is_graded_with_rank_one():
    report = classify(figure1_labeled())
    assert report.consistent and report.graded
    assert report.rank == 1
    assert report.rank_function == FIGURE1_RANKS


def test_figure1_edge_signs_match_omega():
    lp = edge_signs_from_omega(figure1_labeled())
    negative = {(x, y) for x, y, s in lp.sign_items() if s == -1}
    assert negative == {("3", "1"), ("5", "2"), ("9", "6")}


def test_lambda_poset_inconsistent():
    # two minimal elements under one top, with disagreeing signs
    poset = from_cover_relations("abt", [("a", "t"), ("b", "t")])
    lp = LabeledPoset.with_epsilon(poset, [("a", "t", 1), ("b", "t", -1)])
    report = classify(lp)
    assert not report.consistent and not report.graded
    assert report.rank_function is None


def test_v_poset_consistent_but_ungraded():
    poset = from_cover_relations("abc", [("a", "b"), ("a", "c")])
    lp = LabeledPoset.with_epsilon(poset, [("a", "b", 1), ("a", "c", -1)])
    report = classify(lp)
    assert report.consistent and not report.graded
    assert report.rank_function == {"a": 0, "b": 1, "c": -1}


def test_four_chain_canonical_labeling():
    poset = chain("abcd")
    lp = canonical_labeling(LabeledPoset.with_omega(
        poset, {"a": 1, "b": 2, "c": 3, "d": 4}))
    assert lp.omega_map() == {"a": 1, "b": 3, "c": 2, "d": 4}
    assert lp.sign_items() == [("a", "b", 1), ("b", "c", -1), ("c", "d", 1)]
    assert is_canonical(lp)
    assert classify(lp).rank_function == {"a": 0, "b": 1, "c": 0, "d": 1}


def test_natural_chain_is_not_canonical_beyond_two():
    lp = LabeledPoset.with_omega(chain("abc"), {"a": 1, "b": 2, "c": 3})
    assert not is_canonical(lp)  # ranks 0,1,2 leave the {0,1} range


def test_parity_classification():
    # chain sizes 2 and 3 below one top: parities differ
    poset = from_cover_relations("abct", [("a", "t"), ("b", "c"), ("c", "t")])
    report = parity_classification(poset)
    assert not report.parity_consistent and not report.parity_graded
    with pytest.raises(NotParityConsistent):
        canonical_rank01(poset)

    assert parity_classification(figure1()).parity_graded
    witness = parity_classification(figure1()).witness
    lp = LabeledPoset.with_epsilon(figure1(), witness)
    assert classify(lp).graded
    assert set(classify(lp).rank_function.values()) <= {0, 1}


def test_parity_graded_requires_equal_top_parities():
    # disjoint union of a 2-chain and a point: sizes 2 and 1
    poset = from_cover_relations("abx", [("a", "b")])
    report = parity_classification(poset)
    assert report.parity_consistent and not report.parity_graded


def test_delta_statistics_figure1():
    stats = delta_statistics(figure1_labeled())
    assert stats.r_max == 1
    assert stats.lambda_chain
    assert stats.delta["3"] == 1 and stats.delta["10"] == 0
    assert stats.delta_star["8"] == 1 and stats.delta_star["3"] == 0


def test_delta_statistics_v_poset():
    poset = from_cover_relations("abc", [("a", "b"), ("a", "c")])
    lp = LabeledPoset.with_epsilon(poset, [("a", "b", 1), ("a", "c", -1)])
    stats = delta_statistics(lp)
    assert stats.r_max == 1
    assert not stats.lambda_chain  # element c only lies on the -1 chain


def test_dual_consistency_flag():
    # 2-chain plus isolated point, natural signs: dual consistent, ungraded
    poset = from_cover_relations("abx", [("a", "b")])
    lp = LabeledPoset.with_epsilon(poset, [("a", "b", 1)])
    report = classify(lp)
    assert report.consistent and not report.graded and report.dual_consistent
