import math

import pytest

from posetlab import LabeledPoset, from_cover_relations
from posetlab.errors import AlreadyComparable, CycleError, MissingOmega
from posetlab.poset import (
    count_linear_extensions,
    dual,
    extend_with_relation,
    jordan_holder_set,
    linear_extensions,
    maximal_chains,
    principal_ideal,
)

FIGURE1_COVERS = [("3", "1"), ("3", "8"), ("1", "4"), ("1", "5"), ("5", "2"),
                  ("5", "9"), ("4", "9"), ("2", "6"), ("9", "6"), ("7", "10"),
                  ("6", "10")]


def chain(names):
    return from_cover_relations(names, list(zip(names, names[1:])))


def figure1():
    return from_cover_relations([str(i) for i in range(1, 11)], FIGURE1_COVERS)


def test_transitive_reduction_drops_implied_relations():
    poset = from_cover_relations("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert sorted(poset.cover_names()) == [("a", "b"), ("b", "c")]
    assert poset.le("a", "c")


def test_cycles_rejected():
    with pytest.raises(CycleError):
        from_cover_relations("ab", [("a", "b"), ("b", "a")])


def test_chain_and_antichain_extension_counts():
    assert list(linear_extensions(chain("abcd"))) == [("a", "b", "c", "d")]
    anti = from_cover_relations("abcd", [])
    assert len(list(linear_extensions(anti))) == math.factorial(4)
    assert count_linear_extensions(anti) == math.factorial(4)


def test_figure1_extension_count_matches_independent_oracle():
    poset = figure1()
    exts = list(linear_extensions(poset))
    assert len(exts) == len(set(exts)) == count_linear_extensions(poset)


def test_minimal_maximal_and_order():
    poset = figure1()
    els = poset.elements
    assert sorted(els[i] for i in poset.minimal_idx()) == ["3", "7"]
    assert sorted(els[i] for i in poset.maximal_idx()) == ["10", "8"]
    assert poset.le("3", "10")
    assert not poset.comparable_idx(poset.index("8"), poset.index("10"))


def test_maximal_chains_of_figure1():
    chains = maximal_chains(figure1())
    assert ("3", "8") in chains and ("7", "10") in chains
    assert ("3", "1", "5", "2", "6", "10") in chains
    assert len(chains) == 5


def test_dual_flips_covers_and_negates_signs():
    lp = LabeledPoset.with_omega(chain("ab"), {"a": 2, "b": 1})
    assert lp.sign_items() == [("a", "b", -1)]
    flipped = dual(lp)
    assert flipped.poset.cover_names() == [("b", "a")]
    assert flipped.sign_items() == [("b", "a", 1)]
    back = dual(flipped)
    assert back.sign_items() == lp.sign_items()


def test_principal_ideal():
    ideal = principal_ideal(figure1(), "9")
    assert sorted(ideal.elements) == ["1", "3", "4", "5", "9"]


def test_extend_with_relation():
    anti = from_cover_relations("ab", [])
    ext = extend_with_relation(anti, "a", "b")
    assert ext.cover_names() == [("a", "b")]
    with pytest.raises(AlreadyComparable):
        extend_with_relation(ext, "b", "a")


def test_jordan_holder_set_needs_omega():
    lp = LabeledPoset.with_omega(chain("ab"), {"a": 1, "b": 2})
    assert list(jordan_holder_set(lp)) == [(1, 2)]
    eps_only = LabeledPoset.with_epsilon(chain("ab"), [("a", "b", 1)])
    with pytest.raises(MissingOmega):
        list(jordan_holder_set(eps_only))
