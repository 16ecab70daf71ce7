"""covermult: exact standard bases for local degree orderings, tangent
cones, Hilbert-Samuel multiplicities, and stabilization of cyclic branched
covers."""

from .cover import (
    REGULARITY_WARNING,
    CoverAnalysis,
    CoverHypothesisError,
    CoverProblem,
    CoverRow,
    base_multiplicity,
    cover_ideal,
    degree_bound_check,
    mult_table,
    product_structure_check,
    stabilization_threshold,
)
from .hilbert import (
    HilbertSummary,
    ImproperIdealError,
    dim_and_mult,
    hilbert_numerator,
    hilbert_summary,
    hs_dimension_and_multiplicity,
    hs_function_oracle,
    hs_function_sequence,
    minimalize,
    multiplicity_of_local_ring,
    series_coefficients,
)
from .parsing import ParseError, parse_polynomial
from .rings import (
    FpElement,
    MonomialIdeal,
    Monomial,
    Ordering,
    Polynomial,
    PrimeField,
    QQ,
    RationalField,
    RingContext,
    monomial_degree,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomial_quotient,
    monomials_of_degree,
)
from .standard_bases import (
    BuchbergerReport,
    IdealBasis,
    NormalFormTrace,
    ReductionStep,
    SNormalForm,
    buchberger_check,
    ecart,
    ideals_equal,
    initial_ideal_generators,
    leading_ideal,
    minimalize_basis,
    mora_normal_form,
    reduces_to_zero,
    s_normal_form,
    s_polynomial,
    standard_basis,
)

__version__ = "0.1.0"

__all__ = [
    "REGULARITY_WARNING",
    "CoverAnalysis",
    "CoverHypothesisError",
    "CoverProblem",
    "CoverRow",
    "base_multiplicity",
    "cover_ideal",
    "degree_bound_check",
    "mult_table",
    "product_structure_check",
    "stabilization_threshold",
    "HilbertSummary",
    "ImproperIdealError",
    "dim_and_mult",
    "hilbert_numerator",
    "hilbert_summary",
    "hs_dimension_and_multiplicity",
    "hs_function_oracle",
    "hs_function_sequence",
    "minimalize",
    "multiplicity_of_local_ring",
    "series_coefficients",
    "ParseError",
    "parse_polynomial",
    "FpElement",
    "MonomialIdeal",
    "Monomial",
    "Ordering",
    "Polynomial",
    "PrimeField",
    "QQ",
    "RationalField",
    "RingContext",
    "monomial_degree",
    "monomial_divides",
    "monomial_lcm",
    "monomial_mul",
    "monomial_quotient",
    "monomials_of_degree",
    "BuchbergerReport",
    "IdealBasis",
    "NormalFormTrace",
    "ReductionStep",
    "SNormalForm",
    "buchberger_check",
    "ecart",
    "ideals_equal",
    "initial_ideal_generators",
    "leading_ideal",
    "minimalize_basis",
    "mora_normal_form",
    "reduces_to_zero",
    "s_normal_form",
    "s_polynomial",
    "standard_basis",
    "__version__",
]
