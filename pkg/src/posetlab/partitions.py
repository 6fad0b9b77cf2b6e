"""(P,omega)-partition machinery: W- and order polynomials, counting,
e-vectors, the grading-shift map xi and the Phi map, reciprocity."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import (
    CapExceeded,
    DifferentPoset,
    NotGraded,
    UnrealizableSigns,
)
from .grading import classify, delta_statistics
from .polynomial import (
    IntPolynomial,
    EVector,
    qp_add,
    qp_compose_linear,
    qp_eval,
    qp_from_int,
    qp_interpolate,
    qp_mul,
    qp_scale,
    qp_trim,
    to_e_vector,
)
from .poset import LabeledPoset, _extensions_cached

DEFAULT_CAP = 10 ** 6


def enumeration_cap() -> int:
    return int(os.environ.get("POSETLAB_CAP", DEFAULT_CAP))


def synthesize_omega(lp: LabeledPoset) -> LabeledPoset:
    """Any vertex bijection inducing lp's edge signs (greedy smallest first).

    Raises UnrealizableSigns when the sign constraints are cyclic, i.e.
    no omega induces them.
    """
    if lp.has_omega:
        return lp
    poset = lp.poset
    n = poset.p
    signs = lp.signs()
    # constraint digraph: edge a -> b means omega(a) < omega(b)
    succ = [[] for _ in range(n)]
    indeg = [0] * n
    for (i, j), s in signs.items():
        a, b = (i, j) if s == 1 else (j, i)
        succ[a].append(b)
        indeg[b] += 1
    omega = [0] * n
    ready = sorted(i for i in range(n) if indeg[i] == 0)
    for label in range(1, n + 1):
        if not ready:
            raise UnrealizableSigns("edge signs admit no vertex labeling")
        v = ready.pop(0)
        omega[v] = label
        for j in succ[v]:
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
        ready.sort()
    return LabeledPoset(poset, omega=omega)


def is_realizable(lp: LabeledPoset) -> bool:
    if lp.has_omega:
        return True
    try:
        synthesize_omega(lp)
        return True
    except UnrealizableSigns:
        return False


def w_polynomial(lp: LabeledPoset) -> IntPolynomial:
    """Descent generating polynomial over the Jordan-Holder set."""
    lab = synthesize_omega(lp)
    omega = lab.omega
    counts: dict[int, int] = {}
    for ext in _extensions_cached(lp.poset):
        d = sum(omega[ext[i]] > omega[ext[i + 1]] for i in range(len(ext) - 1))
        counts[d] = counts.get(d, 0) + 1
    top = max(counts)
    return IntPolynomial(counts.get(i, 0) for i in range(top + 1))


@dataclass(frozen=True)
class OrderPolynomial:
    """Order polynomial packaged as W-coefficients in the binomial basis:
    Omega(n) = sum_i w_i * C(n + p - 1 - i, p)."""

    w: IntPolynomial
    p: int

    def evaluate(self, n: int) -> int:
        if n < 0:
            raise ValueError("evaluate only at non-negative integers")
        return sum(wi * comb(n + self.p - 1 - i, self.p)
                   for i, wi in enumerate(self.w.coeffs))

    def as_qpoly(self) -> tuple[Fraction, ...]:
        """Omega as an exact polynomial in t."""
        total: tuple[Fraction, ...] = ()
        for i, wi in enumerate(self.w.coeffs):
            term: tuple[Fraction, ...] = (Fraction(1),)
            for j in range(self.p):
                term = qp_mul(term, (Fraction(self.p - 1 - i - j), Fraction(1)))
            total = qp_add(total, qp_scale(term, Fraction(wi, factorial(self.p))))
        return total


def order_polynomial(lp: LabeledPoset) -> OrderPolynomial:
    return OrderPolynomial(w_polynomial(lp), lp.poset.p)


def _strict_bounds(lp: LabeledPoset):
    """Per-element processing order and parent (index, strict) lists."""
    poset = lp.poset
    signs = lp.signs()
    order = sorted(range(poset.p), key=lambda i: (bin(poset.down[i]).count("1"), i))
    pos = {v: k for k, v in enumerate(order)}
    parents = []
    for v in order:
        parents.append([(pos[u], 1 if signs[(u, v)] == -1 else 0)
                        for u in poset.down_covers[v]])
    return order, parents


def count_partitions(lp: LabeledPoset, n: int) -> int:
    """Number of partitions with all parts in {1..n}, by direct backtracking.

    Independent of the W-polynomial route on purpose: this is the oracle
    the binomial formula is checked against.
    """
    if n <= 0:
        return 0
    order, parents = _strict_bounds(lp)
    p = len(order)
    values = [0] * p

    def rec(k: int) -> int:
        if k == p:
            return 1
        ub = n
        for (slot, strict) in parents[k]:
            ub = min(ub, values[slot] - strict)
        if ub <= 0:
            return 0
        total = 0
        for v in range(1, ub + 1):
            values[k] = v
            total += rec(k + 1)
        return total

    return rec(0)


def enumerate_partitions(lp: LabeledPoset, n: int, cap: int | None = None):
    """Yield each valid partition (dict element -> value) exactly once."""
    cap = enumeration_cap() if cap is None else cap
    if count_partitions(lp, n) > cap:
        raise CapExceeded(f"more than {cap} partitions")
    if n <= 0:
        return
    order, parents = _strict_bounds(lp)
    poset = lp.poset
    p = len(order)
    values = [0] * p

    def rec(k: int):
        if k == p:
            yield {poset.elements[order[i]]: values[i] for i in range(p)}
            return
        ub = n
        for (slot, strict) in parents[k]:
            ub = min(ub, values[slot] - strict)
        for v in range(1, ub + 1):
            values[k] = v
            yield from rec(k + 1)

    yield from rec(0)


def is_partition(lp: LabeledPoset, values: dict[str, int], n: int | None = None) -> bool:
    """Check the order-reversing and strictness constraints."""
    poset = lp.poset
    signs = lp.signs()
    vals = [values[e] for e in poset.elements]
    if any(v < 1 for v in vals):
        return False
    if n is not None and any(v > n for v in vals):
        return False
    for (i, j) in poset.covers:
        if signs[(i, j)] == -1:
            if not vals[i] > vals[j]:
                return False
        elif not vals[i] >= vals[j]:
            return False
    return True


def e_vector_direct(lp: LabeledPoset, cap: int | None = None) -> EVector:
    """e_i by explicit enumeration: image exactly {1..i}."""
    p = lp.poset.p
    e = []
    for i in range(1, p + 1):
        target = set(range(1, i + 1))
        e.append(sum(1 for sigma in enumerate_partitions(lp, i, cap=cap)
                     if set(sigma.values()) == target))
    ev = EVector(tuple(e))
    assert ev == to_e_vector(w_polynomial(lp), p), \
        "direct e-vector disagrees with basis conversion"
    return ev


def order_qpoly(lp: LabeledPoset) -> tuple[Fraction, ...]:
    """Omega(P,eps;t) as an exact polynomial, for any sign labeling.

    Realizable labelings go through the W-polynomial; unrealizable ones
    are interpolated from direct counts (the order polynomial has degree
    p for every strictness pattern on the covers).
    """
    if is_realizable(lp):
        return order_polynomial(lp).as_qpoly()
    p = lp.poset.p
    pts = [(n, count_partitions(lp, n)) for n in range(p + 1)]
    return qp_interpolate(pts)


def negate(lp: LabeledPoset) -> LabeledPoset:
    """Same poset, all edge signs flipped."""
    return LabeledPoset(lp.poset, epsilon={e: -s for e, s in lp.signs().items()})


def grading_shift_check(lp_eps: LabeledPoset, lp_mu: LabeledPoset,
                        max_n: int = 3) -> bool:
    """Omega(P,eps;t - r_eps/2) == Omega(P,mu;t - r_mu/2), plus the
    explicit bijection sigma -> sigma + Delta on small bounds."""
    if lp_eps.poset != lp_mu.poset:
        raise DifferentPoset("labelings live on different posets")
    ge, gm = classify(lp_eps), classify(lp_mu)
    if not (ge.graded and gm.graded):
        raise NotGraded("both labelings must be sign-graded")
    oe = order_qpoly(lp_eps)
    om = order_qpoly(lp_mu)
    lhs = qp_compose_linear(oe, 1, Fraction(-ge.rank, 2))
    rhs = qp_compose_linear(om, 1, Fraction(-gm.rank, 2))
    if lhs != rhs:
        return False
    # exponent parity: both ranks have the parity of the chain lengths
    if (ge.rank - gm.rank) % 2 != 0:
        return False
    shift = (ge.rank - gm.rank) // 2
    names = lp_eps.poset.elements
    delta = {}
    for x in names:
        num = (ge.rank - ge.rank_function[x]) - (gm.rank - gm.rank_function[x])
        if num % 2 != 0:
            return False
        delta[x] = num // 2
    for n in range(max_n + 1):
        images = []
        for sigma in enumerate_partitions(lp_eps, n):
            tau = {x: sigma[x] + delta[x] for x in names}
            if not is_partition(lp_mu, tau, n + shift if n + shift >= 0 else 0):
                return False
            images.append(tuple(tau[x] for x in names))
        if len(set(images)) != len(images):
            return False
        target = count_partitions(lp_mu, n + shift) if n + shift >= 0 else 0
        if len(images) != target:
            return False
    return True


@dataclass(frozen=True)
class ReciprocityVerdict:
    holds_at_r: bool
    graded: bool

    @property
    def theorem_consistent(self) -> bool:
        return self.holds_at_r == self.graded


def reciprocity_verdict(lp: LabeledPoset) -> ReciprocityVerdict:
    """Does Omega(P,eps;t) = (-1)^p Omega(P,eps;-t - r) hold, with
    r = max signed maximal-chain length?  Must agree with gradedness."""
    p = lp.poset.p
    r = delta_statistics(lp).r_max
    omega_t = order_qpoly(lp)
    rhs = qp_scale(qp_compose_linear(omega_t, -1, -r), (-1) ** p)
    return ReciprocityVerdict(holds_at_r=(omega_t == rhs),
                              graded=classify(lp).graded)


@dataclass(frozen=True)
class PhiTable:
    n: int
    entries: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    injective: bool
    bijective_onto_bound: bool


def phi_table(lp: LabeledPoset, n: int, cap: int | None = None) -> PhiTable:
    """Apply Phi(sigma) = sigma + delta to every partition with bound n.

    Every image must be a (P,-eps)-partition with bound n + r(eps), and
    Phi must be injective; bijectivity onto the shifted set holds exactly
    when P is dual eps-consistent.
    """
    stats = delta_statistics(lp)
    r = stats.r_max
    neg = negate(lp)
    names = lp.poset.elements
    entries = []
    images = set()
    for sigma in enumerate_partitions(lp, n, cap=cap):
        tau = {x: sigma[x] + stats.delta[x] for x in names}
        bound = n + r
        assert bound >= 0 and is_partition(neg, tau, bound), \
            "Phi image is not a valid partition (theorem violation)"
        key = tuple(tau[x] for x in names)
        images.add(key)
        entries.append((tuple(sigma[x] for x in names), key))
    injective = len(images) == len(entries)
    target = count_partitions(neg, n + r) if n + r >= 0 else 0
    return PhiTable(n=n, entries=tuple(entries), injective=injective,
                    bijective_onto_bound=(len(images) == target))


def rank_identity_check(lp: LabeledPoset) -> bool:
    """2 e_{p-1} = (p + r - 1) e_p and W'(1)/W(1) = p - 1 - e_{p-1}/e_p."""
    report = classify(lp)
    if not report.graded:
        raise NotGraded("rank identities need a sign-graded poset")
    p, r = lp.poset.p, report.rank
    w = w_polynomial(lp)
    e = to_e_vector(w, p).e
    e_top = e[-1]
    e_prev = e[-2] if p >= 2 else 0
    if 2 * e_prev != (p + r - 1) * e_top:
        return False
    return Fraction(w.derivative()(1), w(1)) == p - 1 - Fraction(e_prev, e_top)


def order_poly_equals_shifted_negation(lp: LabeledPoset, s: int) -> bool:
    """Omega(P,eps;t) == Omega(P,-eps;t + s) as exact polynomials."""
    lhs = order_qpoly(lp)
    rhs = qp_compose_linear(order_qpoly(negate(lp)), 1, s)
    return lhs == rhs


# re-export for convenience in reports
def order_values(lp: LabeledPoset, up_to: int) -> list[int]:
    qp = order_qpoly(lp)
    return [int(qp_eval(qp, n)) for n in range(up_to + 1)]


def qpoly_is_zero(qp) -> bool:
    return not qp_trim(list(qp))
