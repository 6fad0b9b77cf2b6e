"""Theorem-verification suites over exhaustively generated small posets.

Each suite quantifies one result over (poset, labeling) pairs and
reports every violation it finds; an empty violation list is a pass.
The NS suite checks a conjecture, not a theorem: a violation there is
flagged as a finding rather than a build failure.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .errors import UnknownSuite
from .generate import all_epsilon_labelings, canonical_labelings, exhaustive_posets
from .grading import classify, delta_statistics, parity_classification
from .partitions import (
    count_partitions,
    e_vector_direct,
    grading_shift_check,
    negate,
    is_realizable,
    order_poly_equals_shifted_negation,
    phi_table,
    rank_identity_check,
    reciprocity_verdict,
    w_polynomial,
)
from .polynomial import is_symmetric, is_unimodal, real_nonpositive_roots, symmetric_expand
from .poset import LabeledPoset
from .structure import (
    antichain,
    antichain_decomposition,
    charney_davis,
    is_saturated,
    ordinal_sum,
    ordinal_sum_w_check,
    reverse_alternating_count,
    saturated_decomposition,
)

# per-size counts of posets up to isomorphism, used as a generator self-test
KNOWN_CLASS_COUNTS = (1, 2, 5, 16, 63, 318, 2045)


@dataclass
class VerificationReport:
    suite: str
    examined: int = 0
    violations: list = field(default_factory=list)
    elapsed: float = 0.0
    conjecture: bool = False

    @property
    def passed(self) -> bool:
        return not self.violations


def _corpus(max_size: int):
    for size in range(1, max_size + 1):
        reps = exhaustive_posets(size)
        if size <= len(KNOWN_CLASS_COUNTS):
            assert len(reps) == KNOWN_CLASS_COUNTS[size - 1], \
                f"generator self-test failed at size {size}"
        yield from reps


def _describe(lp: LabeledPoset) -> dict:
    return {"elements": list(lp.poset.elements),
            "covers": lp.poset.cover_names(),
            "signs": lp.sign_items()}


def _run(suite_id: str, worker, conjecture: bool = False) -> VerificationReport:
    report = VerificationReport(suite=suite_id, conjecture=conjecture)
    start = time.perf_counter()
    worker(report)
    report.elapsed = time.perf_counter() - start
    return report


def suite_t22(max_size: int = 5, **_) -> VerificationReport:
    """Order polynomials of any two gradings agree after the r/2 shift."""
    def worker(report):
        for poset in _corpus(max_size):
            graded = [lp for lp in all_epsilon_labelings(poset)
                      if classify(lp).graded]
            report.examined += len(graded)
            for other in graded[1:]:
                if not grading_shift_check(graded[0], other):
                    report.violations.append(
                        {**_describe(other), "theorem": "T2.2",
                         "expected": "shifted order polynomials equal",
                         "actual": "mismatch"})
    return _run("T2.2", worker)


def suite_t23(max_size: int = 5, **_) -> VerificationReport:
    """Reciprocity for sign-graded posets."""
    def worker(report):
        for poset in _corpus(max_size):
            for lp in all_epsilon_labelings(poset):
                if not classify(lp).graded:
                    continue
                report.examined += 1
                if not reciprocity_verdict(lp).holds_at_r:
                    report.violations.append(
                        {**_describe(lp), "theorem": "T2.3",
                         "expected": "reciprocity at rank", "actual": "fails"})
    return _run("T2.3", worker)


def suite_t25(max_size: int = 6, **_) -> VerificationReport:
    """Parity gradedness characterizes existence of a sign-grading."""
    def worker(report):
        for poset in _corpus(max_size):
            report.examined += 1
            parity = parity_classification(poset)
            exists = any(classify(lp).graded for lp in all_epsilon_labelings(poset))
            ok = parity.parity_graded == exists
            if parity.parity_graded:
                witness = LabeledPoset.with_epsilon(poset, parity.witness)
                witness_cls = classify(witness)
                ok = ok and witness_cls.graded and \
                    set(witness_cls.rank_function.values()) <= {0, 1}
            if not ok:
                report.violations.append(
                    {"elements": list(poset.elements), "covers": poset.cover_names(),
                     "theorem": "T2.5", "expected": "parity == existence + witness",
                     "actual": f"parity_graded={parity.parity_graded}, exists={exists}"})
    return _run("T2.5", worker)


def suite_t32(max_size: int = 5, **_) -> VerificationReport:
    """Saturated decomposition: W-soundness and policy independence."""
    def worker(report):
        for poset in _corpus(max_size):
            for lp in all_epsilon_labelings(poset):
                if not classify(lp).consistent:
                    continue
                report.examined += 1
                dec = saturated_decomposition(lp)
                whole = w_polynomial(lp)
                total = whole * 0
                for part in dec.parts:
                    total = total + w_polynomial(part)
                if total != whole:
                    report.violations.append(
                        {**_describe(lp), "theorem": "T3.2",
                         "expected": "sum of part W-polynomials equals W",
                         "actual": "mismatch"})
                    continue
                alt = saturated_decomposition(lp, policy="highest-rank")
                key = lambda d: sorted(tuple(sorted(q.poset.cover_names()))
                                       for q in d.parts)
                if key(dec) != key(alt):
                    report.violations.append(
                        {**_describe(lp), "theorem": "T3.2",
                         "expected": "policy-independent part set",
                         "actual": "differs"})
    return _run("T3.2", worker)


def suite_p34(max_size: int = 8, seed: int = 0, count: int = 200, **_) -> VerificationReport:
    """Ordinal-sum product laws on random antichain compositions."""
    def worker(report):
        rng = random.Random(seed)
        for _ in range(count):
            total = rng.randint(2, max_size)
            sizes = []
            while total:
                s = rng.randint(1, total)
                sizes.append(s)
                total -= s
            if len(sizes) < 2:
                sizes = [1] + [sizes[0] - 1] if sizes[0] > 1 else sizes + [1]
            blocks = []
            offset = 0
            for s in sizes:
                blocks.append(antichain([f"x{offset + k}" for k in range(s)]))
                offset += s
            acc = blocks[0]
            report.examined += 1
            for blk in blocks[1:]:
                sign = rng.choice((1, -1))
                if not ordinal_sum_w_check(acc, blk, sign):
                    report.violations.append(
                        {"sizes": sizes, "theorem": "P3.4",
                         "expected": "product law", "actual": "mismatch"})
                    break
                acc = ordinal_sum(acc, blk, sign)
    return _run("P3.4", worker)


def suite_p35(max_size: int = 7, **_) -> VerificationReport:
    """Antichain decomposition round-trips on saturated canonical posets."""
    def worker(report):
        for poset in _corpus(max_size):
            for lp in canonical_labelings(poset):
                if not is_saturated(lp):
                    continue
                report.examined += 1
                spec = antichain_decomposition(lp)
                back = spec.reconstruct()
                same = (set(back.poset.elements) == set(poset.elements)
                        and sorted(back.poset.cover_names()) == sorted(poset.cover_names())
                        and back.sign_items() == lp.sign_items())
                if not same:
                    report.violations.append(
                        {**_describe(lp), "theorem": "P3.5",
                         "expected": "round-trip identity", "actual": "differs"})
    return _run("P3.5", worker)


def suite_t42(max_size: int = 6, **_) -> VerificationReport:
    """W of a sign-graded poset: symmetric, non-negative basis expansion."""
    def worker(report):
        for poset in _corpus(max_size):
            for lp in all_epsilon_labelings(poset):
                cls = classify(lp)
                if not cls.graded:
                    continue
                report.examined += 1
                d = poset.p - cls.rank - 1
                w = w_polynomial(lp)
                try:
                    ok = is_symmetric(w, d) and symmetric_expand(w, d).nonnegative
                except Exception:
                    ok = False
                if not ok:
                    report.violations.append(
                        {**_describe(lp), "theorem": "T4.2",
                         "expected": f"symmetric, non-negative in B_{d}",
                         "actual": list(w.coeffs)})
    return _run("T4.2", worker)


def suite_t45(max_size: int = 6, **_) -> VerificationReport:
    """Unimodality when maximal ranks span at most two adjacent values."""
    def worker(report):
        for poset in _corpus(max_size):
            for lp in all_epsilon_labelings(poset):
                cls = classify(lp)
                if not cls.consistent:
                    continue
                tops = {cls.rank_function[poset.elements[i]]
                        for i in poset.maximal_idx()}
                if max(tops) - min(tops) > 1:
                    continue
                report.examined += 1
                if not is_unimodal(w_polynomial(lp)):
                    report.violations.append(
                        {**_describe(lp), "theorem": "T4.5",
                         "expected": "unimodal W", "actual": "not unimodal"})
    return _run("T4.5", worker)


def suite_t52(max_size: int = 6, **_) -> VerificationReport:
    """Charney-Davis quantity counts odd-component reverse alternating
    permutations."""
    def worker(report):
        for poset in _corpus(max_size):
            for lp in canonical_labelings(poset):
                if not classify(lp).graded:
                    continue
                report.examined += 1
                cd = charney_davis(lp)
                rac = reverse_alternating_count(lp)
                if cd != rac:
                    report.violations.append(
                        {**_describe(lp), "theorem": "T5.2",
                         "expected": cd, "actual": rac})
    return _run("T5.2", worker)


def suite_p62(max_size: int = 6, **_) -> VerificationReport:
    """e-vector rank identities, with direct/basis e-vector agreement."""
    def worker(report):
        for poset in _corpus(max_size):
            for lp in all_epsilon_labelings(poset):
                if not classify(lp).graded:
                    continue
                report.examined += 1
                try:
                    e_vector_direct(lp)  # asserts agreement with basis route
                    ok = rank_identity_check(lp)
                except AssertionError:
                    ok = False
                if not ok:
                    report.violations.append(
                        {**_describe(lp), "theorem": "P6.2",
                         "expected": "rank identities", "actual": "fail"})
    return _run("P6.2", worker)


def suite_p71(max_size: int = 5, max_n: int = 3, **_) -> VerificationReport:
    """Phi injective always; bijective onto the shifted bounded set iff
    dual consistent (the bounded rendering stated by the acceptance
    criteria; see notes on its 'if' direction)."""
    def worker(report):
        for poset in _corpus(max_size):
            for lp in all_epsilon_labelings(poset):
                report.examined += 1
                dual_ok = classify(lp).dual_consistent
                bijective = True
                for n in range(1, max_n + 1):
                    table = phi_table(lp, n)
                    if not table.injective:
                        report.violations.append(
                            {**_describe(lp), "theorem": "P7.1", "n": n,
                             "expected": "injective", "actual": "collision"})
                    bijective = bijective and table.bijective_onto_bound
                if bijective != dual_ok:
                    report.violations.append(
                        {**_describe(lp), "theorem": "P7.1",
                         "expected": f"bijective iff dual consistent ({dual_ok})",
                         "actual": f"bijective={bijective}"})
    return _run("P7.1", worker)


def suite_l72(max_size: int = 5, max_n: int = 3, **_) -> VerificationReport:
    """Count equality at a nonzero bound forces the lambda-chain condition."""
    def worker(report):
        for poset in _corpus(max_size):
            for lp in all_epsilon_labelings(poset):
                report.examined += 1
                stats = delta_statistics(lp)
                neg = negate(lp)
                for n in range(1, max_n + 1):
                    lhs = count_partitions(lp, n)
                    if lhs == 0:
                        continue
                    shifted = n + stats.r_max
                    rhs = count_partitions(neg, shifted) if shifted >= 0 else 0
                    if lhs == rhs and not stats.lambda_chain:
                        report.violations.append(
                            {**_describe(lp), "theorem": "L7.2", "n": n,
                             "expected": "lambda-chain condition",
                             "actual": "violated"})
    return _run("L7.2", worker)


def suite_t73(max_size: int = 5, **_) -> VerificationReport:
    """Reciprocity at r(eps) holds exactly for sign-graded labelings."""
    def worker(report):
        for poset in _corpus(max_size):
            for lp in all_epsilon_labelings(poset):
                report.examined += 1
                verdict = reciprocity_verdict(lp)
                if not verdict.theorem_consistent:
                    report.violations.append(
                        {**_describe(lp), "theorem": "T7.3",
                         "expected": f"identity iff graded ({verdict.graded})",
                         "actual": f"identity={verdict.holds_at_r}"})
    return _run("T7.3", worker)


def suite_c74(max_size: int = 5, **_) -> VerificationReport:
    """Any integer shift s with Omega(eps;t) = Omega(-eps;t+s) satisfies
    -r(-eps) <= s <= r(eps)."""
    def worker(report):
        for poset in _corpus(max_size):
            p = poset.p
            for lp in all_epsilon_labelings(poset):
                report.examined += 1
                r_pos = delta_statistics(lp).r_max
                r_neg = delta_statistics(negate(lp)).r_max
                for s in range(-p, p + 1):
                    if order_poly_equals_shifted_negation(lp, s):
                        if not (-r_neg <= s <= r_pos):
                            report.violations.append(
                                {**_describe(lp), "theorem": "C7.4", "s": s,
                                 "expected": f"{-r_neg} <= s <= {r_pos}",
                                 "actual": "out of bounds"})
    return _run("C7.4", worker)


def suite_ns(max_size: int = 6, **_) -> VerificationReport:
    """Neggers-Stanley check: real zeros of W (conjecture, not theorem)."""
    def worker(report):
        for poset in _corpus(max_size):
            for lp in all_epsilon_labelings(poset):
                if not is_realizable(lp):
                    continue
                report.examined += 1
                w = w_polynomial(lp)
                if not real_nonpositive_roots(w):
                    report.violations.append(
                        {**_describe(lp), "theorem": "NS (conjecture)",
                         "expected": "real non-positive zeros",
                         "actual": list(w.coeffs)})
    return _run("NS", worker, conjecture=True)


SUITES = {
    "T2.2": suite_t22,
    "T2.3": suite_t23,
    "T2.5": suite_t25,
    "T3.2": suite_t32,
    "P3.4": suite_p34,
    "P3.5": suite_p35,
    "T4.2": suite_t42,
    "T4.5": suite_t45,
    "T5.2": suite_t52,
    "P6.2": suite_p62,
    "P7.1": suite_p71,
    "L7.2": suite_l72,
    "T7.3": suite_t73,
    "C7.4": suite_c74,
    "NS": suite_ns,
}


def run_suite(suite: str, **bounds) -> VerificationReport:
    if suite not in SUITES:
        raise UnknownSuite(f"no suite named {suite!r}")
    bounds = {k: v for k, v in bounds.items() if v is not None}
    return SUITES[suite](**bounds)
