"""Sign-gradings: consistency, rank functions, parity, canonical labelings.

A poset is epsilon-consistent when all saturated chains from a minimal
element up to any fixed y have the same signed length; that common value
is the rank function rho(y).  It is epsilon-graded when additionally rho
is constant on maximal elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotConsistent, NotParityConsistent
from .poset import LabeledPoset, Poset, dual


@dataclass(frozen=True)
class GradingReport:
    consistent: bool
    graded: bool
    rank_function: Optional[dict[str, int]]
    rank: Optional[int]
    dual_consistent: bool


@dataclass(frozen=True)
class ParityReport:
    parity_graded: bool
    parity_consistent: bool
    witness: Optional[dict[tuple[str, str], int]]


@dataclass(frozen=True)
class DeltaStatistics:
    delta: dict[str, int]
    delta_star: dict[str, int]
    r_max: int
    lambda_chain: bool


def edge_signs_from_omega(lp: LabeledPoset) -> LabeledPoset:
    """Replace a vertex labeling by its induced edge-sign labeling."""
    return LabeledPoset(lp.poset, epsilon=lp.signs())


def _topo(poset: Poset) -> list[int]:
    # elements sorted by size of their strict down-set works as a
    # topological order and is deterministic
    return sorted(range(poset.p), key=lambda i: (bin(poset.down[i]).count("1"), i))


def _rank_function(poset: Poset, signs) -> Optional[list[int]]:
    """Signed rank per element, or None if some principal ideal is ungraded."""
    rho = [0] * poset.p
    for v in _topo(poset):
        preds = poset.down_covers[v]
        if not preds:
            rho[v] = 0
            continue
        vals = {rho[u] + signs[(u, v)] for u in preds}
        if len(vals) != 1:
            return None
        rho[v] = vals.pop()
    return rho


def _consistent_rank(lp: LabeledPoset):
    return _rank_function(lp.poset, lp.signs())


def classify(lp: LabeledPoset) -> GradingReport:
    """Consistency / gradedness classification with rank data."""
    poset = lp.poset
    rho = _consistent_rank(lp)
    dual_ok = _consistent_rank(dual(lp)) is not None
    if rho is None:
        return GradingReport(False, False, None, None, dual_ok)
    max_ranks = {rho[i] for i in poset.maximal_idx()}
    graded = len(max_ranks) == 1
    return GradingReport(
        consistent=True,
        graded=graded,
        rank_function={poset.elements[i]: rho[i] for i in range(poset.p)},
        rank=max_ranks.pop() if graded else None,
        dual_consistent=dual_ok,
    )


def _chain_lengths(poset: Poset) -> Optional[list[int]]:
    """length mod 2 of saturated chains from a minimal element, if well defined."""
    ell = [0] * poset.p
    for v in _topo(poset):
        preds = poset.down_covers[v]
        if not preds:
            ell[v] = 0
            continue
        vals = {(ell[u] + 1) % 2 for u in preds}
        if len(vals) != 1:
            return None
        ell[v] = vals.pop()
    return ell


def parity_classification(poset: Poset) -> ParityReport:
    """Parity gradedness and the witness labeling eps(x,y) = (-1)^len(x).

    Parity graded means all maximal chains have sizes of equal parity,
    which forces the chain length to every element to be well defined
    mod 2; parity consistent asks the same per principal ideal.
    """
    ell = _chain_lengths(poset)
    if ell is None:
        return ParityReport(False, False, None)
    top_parities = {ell[i] % 2 for i in poset.maximal_idx()}
    graded = len(top_parities) == 1
    witness = {(poset.elements[i], poset.elements[j]): (1 if ell[i] % 2 == 0 else -1)
               for (i, j) in poset.covers}
    return ParityReport(graded, True, witness)


def canonical_rank01(poset: Poset) -> list[int]:
    """Rank function in {0,1} of the parity-witness labeling."""
    ell = _chain_lengths(poset)
    if ell is None:
        raise NotParityConsistent("poset is not parity consistent")
    return [x % 2 for x in ell]


def canonical_labeling(lp: LabeledPoset) -> LabeledPoset:
    """Canonical omega: rank-0 elements get 1..k, rank-1 elements k+1..p.

    Requires the given labeling to be consistent and the poset to be
    parity consistent.  The induced edge signs are (-1)^len(x) and the
    induced rank function takes values in {0,1}.
    """
    if _consistent_rank(lp) is None:
        raise NotConsistent("labeling is not sign-consistent")
    poset = lp.poset
    rank01 = canonical_rank01(poset)
    order = sorted(range(poset.p), key=lambda i: (rank01[i], i))
    omega = [0] * poset.p
    for label, i in enumerate(order, start=1):
        omega[i] = label
    return LabeledPoset(poset, omega=omega)


def is_canonical(lp: LabeledPoset) -> bool:
    """Does lp carry an omega with {0,1} ranks, monotone across ranks?"""
    if not lp.has_omega:
        return False
    rho = _consistent_rank(lp)
    if rho is None or not set(rho) <= {0, 1}:
        return False
    n = lp.poset.p
    return all(lp.omega[i] < lp.omega[j]
               for i in range(n) for j in range(n) if rho[i] < rho[j])


def delta_statistics(lp: LabeledPoset) -> DeltaStatistics:
    """Max signed chain lengths up (delta), down (delta*), and r_max."""
    poset = lp.poset
    signs = lp.signs()
    topo = _topo(poset)
    delta = [0] * poset.p
    for v in reversed(topo):
        ups = poset.up_covers[v]
        if ups:
            delta[v] = max(signs[(v, j)] + delta[j] for j in ups)
    dstar = [0] * poset.p
    for v in topo:
        downs = poset.down_covers[v]
        if downs:
            dstar[v] = max(dstar[u] + signs[(u, v)] for u in downs)
    r_max = max(delta[m] for m in poset.minimal_idx())
    lam = all(delta[i] + dstar[i] == r_max for i in range(poset.p))
    names = poset.elements
    return DeltaStatistics(
        delta={names[i]: delta[i] for i in range(poset.p)},
        delta_star={names[i]: dstar[i] for i in range(poset.p)},
        r_max=r_max,
        lambda_chain=lam,
    )
