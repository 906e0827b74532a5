"""Centralizers in the plactic monoid: tableau algorithms, membership tests,
stability probes and counting."""

from ._backend import BACKEND
from .characterize import (
    c1c2_power_invariance,
    c_one_membership,
    descent_run,
    is_permutation,
    lwi_growth_check,
    r2_product_length,
    row_bound_check,
    row_shift_check,
    staircase_membership,
    two_letter_membership,
)
from .counting import (
    CoeffVector,
    CoefficientReport,
    LabeledPoset,
    b_count,
    b_witness,
    c_via_schur_formula,
    coefficient_report,
    count_c,
    count_c_refined,
    descent_count,
    expand_in_binomial_basis,
    g_poly,
    linear_extensions,
    log_concavity,
    poset_from_partition,
)
from .errors import (
    AlphabetError,
    InconsistentValuesError,
    InvalidTableauError,
    InvalidWordError,
    PlacticError,
    ResourceGuardError,
    SingleLetterCase,
)
from .plactic import (
    CentralizerSlice,
    centralizer_slice,
    centralizer_words,
    class_words,
    in_centralizer,
    knuth_class,
    knuth_equivalent,
    knuth_neighbors,
    slice_counts,
)
from .stability import (
    FingerprintCache,
    StabilityReport,
    TruncatedCentralizer,
    m_stability_check_permutation,
    packed_conjecture_sweep,
    stability_probe,
    strong_stability_check_two_letter,
    truncated_centralizer,
)
from .tableaux import (
    BumpTrace,
    Partition,
    SkewConfiguration,
    Tableau,
    enumerate_ssyt,
    greene_invariant,
    hook_count,
    insert,
    jdt_rectify,
    lwi_bruteforce,
    lwi_ending_at,
    p_tableau,
    row,
    rsk,
    singleton_count,
    ssyt_count,
)
from .words import (
    Word,
    concat,
    decreasing,
    format_word,
    is_packed,
    multiplicity,
    parse_word,
    power,
    restrict,
    standardize,
)

__version__ = "0.1.0"
