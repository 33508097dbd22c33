"""lehmerlab: exact tools for Mahler measures, growth rates and braid invariants."""

from .polynomial import (
    IntPoly,
    LaurentPoly,
    MahlerResult,
    RootList,
    PrecisionError,
    cyclotomic,
    format_poly,
    irreducibility_certificate,
    is_cyclotomic_product,
    is_reciprocal,
    lehmer_polynomial,
    mahler_measure,
    parse_poly,
    poly_from_roots,
    roots,
)
from .sequence import (
    ExactSeq,
    GrowthReport,
    NoRecurrenceFound,
    Recurrence,
    eventually_periodic,
    fit_min_poly,
    growth_rate,
    growth_report,
    hankel_det,
    hankel_values,
    max_growth_exact,
    parse_seq,
    seq_from_recurrence,
    tail_equivalence,
)
from .freegroup import (
    BudgetError,
    Endo,
    EndoGrowthReport,
    F2Descent,
    Word,
    abelianization,
    apply,
    compose,
    endo_from_matrix,
    format_endo,
    format_word,
    growth_report_sum,
    iterate_lengths,
    nielsen_verify_basis,
    parse_endo,
    parse_word,
    positive_f2_aut,
)
from .freegroup import growth_report as endo_growth_report
from .freegroup import reduce as reduce_word
from .braid import (
    BraidWord,
    BurauMat,
    EntropyEstimate,
    artin_endo,
    det_burau_minus_identity,
    entropy_estimate,
    format_braid,
    lehmer_gap,
    parse_braid,
    reduced_alexander,
    reduced_burau,
)
from .dynamics import (
    IntMatrix,
    SignedShiftSystem,
    char_poly,
    companion_matrix,
    cyclotomic_padding,
    lefschetz_seq,
    moebius,
    net_trace,
    net_traces,
    newton_power_sums,
    perron_check,
    primitivity,
    signed_trace_seq,
    trace_powers,
    verify_kor_instance,
)

__all__ = [
    "IntPoly",
    "LaurentPoly",
    "MahlerResult",
    "RootList",
    "PrecisionError",
    "cyclotomic",
    "format_poly",
    "irreducibility_certificate",
    "is_cyclotomic_product",
    "is_reciprocal",
    "lehmer_polynomial",
    "mahler_measure",
    "parse_poly",
    "poly_from_roots",
    "roots",
    "ExactSeq",
    "GrowthReport",
    "NoRecurrenceFound",
    "Recurrence",
    "eventually_periodic",
    "fit_min_poly",
    "growth_rate",
    "growth_report",
    "hankel_det",
    "hankel_values",
    "max_growth_exact",
    "parse_seq",
    "seq_from_recurrence",
    "tail_equivalence",
    "IntMatrix",
    "SignedShiftSystem",
    "char_poly",
    "companion_matrix",
    "cyclotomic_padding",
    "lefschetz_seq",
    "moebius",
    "net_trace",
    "net_traces",
    "newton_power_sums",
    "perron_check",
    "primitivity",
    "signed_trace_seq",
    "trace_powers",
    "verify_kor_instance",
    "BudgetError",
    "Endo",
    "EndoGrowthReport",
    "F2Descent",
    "Word",
    "abelianization",
    "apply",
    "compose",
    "endo_from_matrix",
    "endo_growth_report",
    "format_endo",
    "format_word",
    "growth_report_sum",
    "iterate_lengths",
    "nielsen_verify_basis",
    "parse_endo",
    "parse_word",
    "positive_f2_aut",
    "reduce_word",
    "BraidWord",
    "BurauMat",
    "EntropyEstimate",
    "artin_endo",
    "det_burau_minus_identity",
    "entropy_estimate",
    "format_braid",
    "lehmer_gap",
    "parse_braid",
    "reduced_alexander",
    "reduced_burau",
]
