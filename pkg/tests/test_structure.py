import pytest

from posetlab import LabeledPoset, from_cover_relations
from posetlab.errors import BadRankGap, Comparable, NotCanonical, NotGraded
from posetlab.partitions import w_polynomial
from posetlab.polynomial import IntPolynomial
from posetlab.structure import (
    antichain,
    antichain_decomposition,
    charney_davis,
    eulerian_cd_check,
    is_saturated,
    ordinal_sum,
    ordinal_sum_w_check,
    reverse_alternating_count,
    saturated_decomposition,
    split_at_pair,
)

from test_poset import chain
from test_grading import figure1_labeled


def splittable():
    # a < b with c isolated: (c, b) is incomparable with adjacent ranks
    poset = from_cover_relations("abc", [("a", "b")])
    return LabeledPoset.with_omega(poset, {"a": 1, "b": 2, "c": 3})


def test_split_at_pair_partitions_the_w_polynomial():
    lp = splittable()
    lo, hi = split_at_pair(lp, "c", "b")
    assert sorted(lo.poset.cover_names()) == [("a", "b"), ("c", "b")]
    assert sorted(hi.poset.cover_names()) == [("a", "b"), ("b", "c")]
    assert w_polynomial(lo) + w_polynomial(hi) == w_polynomial(lp)
    with pytest.raises(Comparable):
        split_at_pair(lo, "c", "b")


def test_split_requires_adjacent_ranks():
    poset = from_cover_relations("abx", [("a", "b")])
    lp = LabeledPoset.with_omega(poset, {"a": 1, "b": 2, "x": 3})
    # rho(b) = 1, rho(x) = 0: splitting (x, b) is fine, (b, x) is not
    split_at_pair(lp, "x", "b")
    with pytest.raises(BadRankGap):
        split_at_pair(lp, "b", "x")


def test_antichain_is_already_saturated():
    assert is_saturated(antichain("abc"))
    assert len(saturated_decomposition(antichain("abc")).parts) == 1


def test_saturated_decomposition_splits_and_sums():
    lp = splittable()
    assert not is_saturated(lp)
    dec = saturated_decomposition(lp)
    assert len(dec.parts) == 2
    total = IntPolynomial.zero()
    for part in dec.parts:
        assert is_saturated(part)
        total = total + w_polynomial(part)
    assert total == w_polynomial(lp)


def test_saturated_decomposition_policy_independent():
    lp = figure1_labeled()
    low = saturated_decomposition(lp, policy="lowest-rank")
    high = saturated_decomposition(lp, policy="highest-rank")
    key = lambda dec: sorted(tuple(sorted(q.poset.cover_names()))
                             for q in dec.parts)
    assert key(low) == key(high)
    total = IntPolynomial.zero()
    for part in low.parts:
        total = total + w_polynomial(part)
    assert total == w_polynomial(lp)


def test_ordinal_sum_product_laws():
    a2 = antichain("ab")
    point = antichain("c")
    plus = ordinal_sum(a2, point, 1)
    assert w_polynomial(plus) == w_polynomial(a2)  # W(point) = 1
    minus = ordinal_sum(a2, point, -1)
    assert w_polynomial(minus) == w_polynomial(a2) * IntPolynomial.t()
    assert ordinal_sum_w_check(a2, a2, 1)
    assert ordinal_sum_w_check(a2, a2, -1)


def test_ordinal_sum_renames_collisions():
    summed = ordinal_sum(antichain("a"), antichain("a"), 1)
    assert sorted(summed.poset.elements) == ["a", "a'"]
    assert summed.sign_items() == [("a", "a'", 1)]


def test_antichain_decomposition_round_trip():
    lp = antichain("ab")
    tower = ordinal_sum(lp, antichain("cd"), 1)
    # canonical omega: ranks 0,0,1,1 with labels 1,2,3,4 bottom-up
    tower = LabeledPoset.with_omega(tower.poset,
                                    {"a": 1, "b": 2, "c": 3, "d": 4})
    spec = antichain_decomposition(tower)
    assert [blk.poset.p for blk in spec.blocks] == [2, 2]
    assert spec.glue_signs == (1,)
    back = spec.reconstruct()
    assert sorted(back.poset.cover_names()) == sorted(tower.poset.cover_names())
    assert back.sign_items() == tower.sign_items()


def test_antichain_decomposition_rejects_non_canonical():
    lp = LabeledPoset.with_omega(chain("abc"), {"a": 1, "b": 2, "c": 3})
    with pytest.raises(NotCanonical):
        antichain_decomposition(lp)


def test_charney_davis_three_antichain():
    lp = antichain("abc")
    assert w_polynomial(lp) == IntPolynomial((1, 4, 1))
    assert charney_davis(lp) == 2
    assert reverse_alternating_count(lp) == 2


def test_charney_davis_vanishes_on_odd_codimension():
    assert charney_davis(antichain("ab")) == 0
    lp = LabeledPoset.with_omega(chain("ab"), {"a": 1, "b": 2})
    assert charney_davis(lp) == 1  # p - 1 - r = 0, W = 1
    assert reverse_alternating_count(antichain("ab")) == 0


def test_charney_davis_needs_graded():
    poset = from_cover_relations("abx", [("a", "b")])
    with pytest.raises(NotGraded):
        charney_davis(LabeledPoset.with_omega(poset, {"a": 1, "b": 2, "x": 3}))


@pytest.mark.parametrize("n", range(1, 8))
def test_eulerian_cd_check(n):
    assert eulerian_cd_check(n)
