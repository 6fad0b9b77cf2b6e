"""Structural decompositions and the Charney-Davis quantity.

Splitting at an incomparable rank-adjacent pair partitions the
Jordan-Holder set; iterating yields the unique decomposition into
saturated extensions.  Saturated canonical posets are ordinal sums of
antichains with alternating glue signs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import (
    BadRankGap,
    Comparable,
    InvalidSize,
    NotCanonical,
    NotConsistent,
    NotGraded,
    NotSaturated,
)
from .grading import classify, is_canonical
from .polynomial import IntPolynomial, eulerian
from .poset import (
    LabeledPoset,
    Poset,
    extend_with_relation,
    from_cover_relations,
    jordan_holder_set,
)
from .partitions import w_polynomial


def _monotone_omega(lp: LabeledPoset) -> LabeledPoset:
    """A labeling with the same edge signs and omega increasing with rank.

    Exists for every consistent labeling: covers raise the rank by their
    sign, so sorting by (rank, element order) respects all constraints.
    """
    report = classify(lp)
    if not report.consistent:
        raise NotConsistent("labeling is not sign-consistent")
    poset = lp.poset
    rho = [report.rank_function[e] for e in poset.elements]
    order = sorted(range(poset.p), key=lambda i: (rho[i], i))
    omega = [0] * poset.p
    for label, i in enumerate(order, start=1):
        omega[i] = label
    cand = LabeledPoset(poset, omega=omega)
    assert cand.signs() == lp.signs()
    return cand


def split_at_pair(lp: LabeledPoset, x, y) -> tuple[LabeledPoset, LabeledPoset]:
    """(P', P'') = (close with x < y, close with y < x), same labels.

    Requires rho(y) = rho(x) + 1 and x, y incomparable; the two parts
    are consistent with the same rank function and their Jordan-Holder
    sets partition that of the input.
    """
    report = classify(lp)
    if not report.consistent:
        raise NotConsistent("labeling is not sign-consistent")
    poset = lp.poset
    xi, yi = poset.index(x), poset.index(y)
    if poset.comparable_idx(xi, yi):
        raise Comparable(f"{x!r} and {y!r} are comparable")
    if report.rank_function[str(y)] != report.rank_function[str(x)] + 1:
        raise BadRankGap("need rho(y) = rho(x) + 1")
    lab = lp if (lp.has_omega and lp.omega[xi] < lp.omega[yi]) else _monotone_omega(lp)
    p_lo = extend_with_relation(poset, x, y)
    p_hi = extend_with_relation(poset, y, x)
    omega_map = lab.omega_map()
    return (LabeledPoset.with_omega(p_lo, omega_map),
            LabeledPoset.with_omega(p_hi, omega_map))


def is_saturated(lp: LabeledPoset) -> bool:
    """Any two elements at adjacent ranks are comparable."""
    report = classify(lp)
    if not report.consistent:
        raise NotConsistent("labeling is not sign-consistent")
    poset = lp.poset
    rho = [report.rank_function[e] for e in poset.elements]
    return all(poset.comparable_idx(i, j)
               for i in range(poset.p) for j in range(i + 1, poset.p)
               if abs(rho[i] - rho[j]) == 1)


@dataclass(frozen=True)
class SaturatedDecomposition:
    parts: tuple[LabeledPoset, ...]


def _find_split_pair(lp: LabeledPoset, policy: str):
    report = classify(lp)
    poset = lp.poset
    rho = [report.rank_function[e] for e in poset.elements]
    pairs = [(i, j)
             for i in range(poset.p) for j in range(poset.p)
             if rho[j] == rho[i] + 1 and not poset.comparable_idx(i, j)]
    if not pairs:
        return None
    if policy == "lowest-rank":
        return min(pairs, key=lambda ij: (rho[ij[0]], ij[0], ij[1]))
    if policy == "highest-rank":
        return max(pairs, key=lambda ij: (rho[ij[0]], ij[0], ij[1]))
    raise ValueError(f"unknown split policy {policy!r}")


def saturated_decomposition(lp: LabeledPoset,
                            policy: str = "lowest-rank") -> SaturatedDecomposition:
    """Split repeatedly until every part is saturated.

    The part multiset does not depend on the split-pair policy; that
    uniqueness is tested, not assumed.
    """
    lab = _monotone_omega(lp) if not lp.has_omega else lp
    parts: list[LabeledPoset] = []
    stack = [lab]
    while stack:
        cur = stack.pop()
        pair = _find_split_pair(cur, policy)
        if pair is None:
            parts.append(cur)
            continue
        i, j = pair
        els = cur.poset.elements
        stack.extend(split_at_pair(cur, els[i], els[j]))
    keys = sorted(tuple(sorted(q.poset.cover_names())) for q in parts)
    assert len(set(keys)) == len(keys), "duplicate saturated parts"
    parts.sort(key=lambda q: tuple(sorted(q.poset.cover_names())))
    return SaturatedDecomposition(tuple(parts))


# -- ordinal sums ------------------------------------------------------

def ordinal_sum(a: LabeledPoset, b: LabeledPoset, sign: int) -> LabeledPoset:
    """Stack b on top of a; glue covers (max of a, min of b) carry sign."""
    if sign not in (1, -1):
        raise ValueError("glue sign must be +1 or -1")
    a_names = list(a.poset.elements)
    used = set(a_names)
    rename = {}
    for name in b.poset.elements:
        new = name
        while new in used:
            new += "'"
        used.add(new)
        rename[name] = new
    b_names = [rename[e] for e in b.poset.elements]
    covers = list(a.poset.cover_names())
    covers += [(rename[x], rename[y]) for (x, y) in b.poset.cover_names()]
    glue = [(a.poset.elements[i], rename[b.poset.elements[j]])
            for i in a.poset.maximal_idx() for j in b.poset.minimal_idx()]
    poset = from_cover_relations(a_names + b_names, covers + glue)
    eps = {(x, y): s for (x, y, s) in a.sign_items()}
    eps.update({(rename[x], rename[y]): s for (x, y, s) in b.sign_items()})
    eps.update({pair: sign for pair in glue})
    return LabeledPoset.with_epsilon(poset, eps)


def ordinal_sum_w_check(a: LabeledPoset, b: LabeledPoset, sign: int) -> bool:
    """W(a +o b) equals W(a)W(b), times t for glue sign -1 (all by
    independent descent enumeration)."""
    total = w_polynomial(ordinal_sum(a, b, sign))
    prod = w_polynomial(a) * w_polynomial(b)
    if sign == -1:
        prod = prod * IntPolynomial.t()
    return total == prod


@dataclass(frozen=True)
class OrdinalSumSpec:
    """Antichain blocks bottom-up with the glue sign after each block."""

    blocks: tuple[LabeledPoset, ...]
    glue_signs: tuple[int, ...]

    def reconstruct(self) -> LabeledPoset:
        acc = self.blocks[0]
        for blk, s in zip(self.blocks[1:], self.glue_signs):
            acc = ordinal_sum(acc, blk, s)
        return acc


def antichain(names) -> LabeledPoset:
    poset = from_cover_relations(list(names), [])
    return LabeledPoset(poset, omega=list(range(1, poset.p + 1)))


def antichain_decomposition(lp: LabeledPoset) -> OrdinalSumSpec:
    """Peel a saturated canonical poset into antichain layers.

    Glue signs alternate +1, -1, +1, ... because canonical ranks live in
    {0, 1} starting at 0 on minimal elements.
    """
    if not is_canonical(lp):
        raise NotCanonical("needs a canonical labeling")
    if not is_saturated(lp):
        raise NotSaturated("poset is not saturated")
    poset = lp.poset
    signs = lp.signs()
    remaining = set(range(poset.p))
    blocks: list[list[int]] = []
    while remaining:
        layer = sorted(v for v in remaining
                       if all(u not in remaining for u in poset.down_covers[v]))
        for v in layer:
            for w in layer:
                if v != w and poset.comparable_idx(v, w):
                    raise NotSaturated("layer is not an antichain")
        blocks.append(layer)
        remaining -= set(layer)
    glue = []
    for lower, upper in zip(blocks, blocks[1:]):
        pair_signs = {signs[(i, j)] for i in lower for j in upper}
        if len(pair_signs) != 1 or any(not poset.le_idx(i, j)
                                       for i in lower for j in upper):
            raise NotSaturated("blocks are not fully glued")
        glue.append(pair_signs.pop())
    expected = [1 if k % 2 == 0 else -1 for k in range(len(glue))]
    if glue != expected:
        raise NotCanonical("glue signs do not alternate from +1")
    block_lps = tuple(antichain([poset.elements[i] for i in blk]) for blk in blocks)
    return OrdinalSumSpec(block_lps, tuple(glue))


# -- Charney-Davis -----------------------------------------------------

def charney_davis(lp: LabeledPoset) -> int:
    """(-1)^((p-1-r)/2) W(P;-1) for a sign-graded poset; 0 when p-1-r is odd."""
    report = classify(lp)
    if not report.graded:
        raise NotGraded("Charney-Davis quantity needs a sign-graded poset")
    p, r = lp.poset.p, report.rank
    w = w_polynomial(lp)
    if (p - 1 - r) % 2 == 1:
        assert w(-1) == 0
        return 0
    value = (-1) ** ((p - 1 - r) // 2) * w(-1)
    assert value >= 0
    return value


def _is_reverse_alternating(pi) -> bool:
    for i in range(len(pi) - 1):
        if i % 2 == 0:
            if not pi[i] < pi[i + 1]:
                return False
        elif not pi[i] > pi[i + 1]:
            return False
    return True


def reverse_alternating_count(lp: LabeledPoset) -> int:
    """Reverse alternating permutations in the Jordan-Holder set whose
    constant-rank components all have odd length."""
    if not is_canonical(lp):
        raise NotCanonical("needs a canonical labeling")
    report = classify(lp)
    if not report.graded:
        raise NotGraded("needs a sign-graded poset")
    poset = lp.poset
    rank_of_label = {lp.omega[i]: report.rank_function[poset.elements[i]]
                     for i in range(poset.p)}
    count = 0
    for pi in jordan_holder_set(lp):
        if not _is_reverse_alternating(pi):
            continue
        run, ok = 1, True
        for i in range(1, len(pi)):
            if rank_of_label[pi[i]] == rank_of_label[pi[i - 1]]:
                run += 1
            else:
                if run % 2 == 0:
                    ok = False
                    break
                run = 1
        if ok and run % 2 == 1:
            count += 1
    return count


def eulerian_cd_check(n: int) -> bool:
    """Proposition on antichains: sign-adjusted A_n(-1) counts reverse
    alternating permutations for odd n and vanishes for even n."""
    if n < 1:
        raise InvalidSize("needs n >= 1")
    value = eulerian(n)(-1)
    if n % 2 == 0:
        return value == 0
    scan = sum(1 for pi in permutations(range(1, n + 1))
               if _is_reverse_alternating(pi))
    return (-1) ** ((n - 1) // 2) * value == scan
