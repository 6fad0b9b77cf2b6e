"""Exact-arithmetic toolkit for sign-graded labeled posets."""

from .errors import PosetlabError
from .generate import (
    all_epsilon_labelings,
    canonical_labelings,
    exhaustive_posets,
    generate_posets,
    labelings_for,
    random_posets,
)
from .grading import (
    canonical_labeling,
    classify,
    delta_statistics,
    is_canonical,
    parity_classification,
)
from .partitions import (
    count_partitions,
    e_vector_direct,
    enumerate_partitions,
    grading_shift_check,
    is_partition,
    is_realizable,
    order_polynomial,
    order_qpoly,
    phi_table,
    rank_identity_check,
    reciprocity_verdict,
    synthesize_omega,
    w_polynomial,
)
from .polynomial import (
    EVector,
    IntPolynomial,
    SymmetricExpansion,
    eulerian,
    is_symmetric,
    is_unimodal,
    mode,
    real_nonpositive_roots,
    symmetric_expand,
    to_e_vector,
)
from .poset import LabeledPoset, Poset, from_cover_relations
from .structure import (
    antichain,
    antichain_decomposition,
    charney_davis,
    eulerian_cd_check,
    is_saturated,
    ordinal_sum,
    reverse_alternating_count,
    saturated_decomposition,
    split_at_pair,
)
from .suites import SUITES, VerificationReport, run_suite

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "1.0.0"
