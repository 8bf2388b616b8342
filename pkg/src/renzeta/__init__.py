"""Exact renormalized multiple zeta values at non-positive integers.

The pipeline: directional regularized nested sums expand into truncated
Laurent series in eps with exact rational (or rational-function-in-delta)
coefficients; the quasi-shuffle Hopf algebra of (exponent, direction) words
organizes their products; the Birkhoff decomposition against the pole-part
projector splits each series into a counterterm and a renormalized part whose
constant term is the renormalized value.
"""

from renzeta.arith import (
    DELTA,
    DeltaRationalFunction,
    PoleAtZero,
    bernoulli,
    zeta_nonpositive,
)
from renzeta.laurent import (
    DELTA_FIELD,
    IncompletePolePart,
    InsufficientPrecision,
    PrecisionError,
    RATIONAL_FIELD,
    T,
    T_POLY_RING,
    TPolynomial,
    TruncatedLaurentSeries,
    one_series,
    scalar_series,
    series_from_terms,
    windows_agree,
    zero_series,
)
from renzeta.hopf import (
    EMPTY_WORD,
    HopfElement,
    Letter,
    Word,
    coproduct,
    counit,
    differentiate,
    quasi_shuffle,
    reduced_coproduct,
)
from renzeta.birkhoff import (
    Character,
    CheckReport,
    DecompositionSession,
    PrecisionBudget,
    convolve,
    verify_differential_compatibility,
)
from renzeta.mzv import (
    argument_word,
    decomposition_session,
    expansion_character,
    numeric_oracle,
    one_var_series,
    regularized_expansion,
    renorm_directional,
    renorm_mzv,
    renormalized_series,
    symmetrized_zero,
)
from renzeta.suites import SUITES, run_suite

__version__ = "0.1.0"

__all__ = [
    "DELTA",
    "DELTA_FIELD",
    "DeltaRationalFunction",
    "PoleAtZero",
    "bernoulli",
    "zeta_nonpositive",
    "IncompletePolePart",
    "InsufficientPrecision",
    "PrecisionError",
    "RATIONAL_FIELD",
    "T",
    "T_POLY_RING",
    "TPolynomial",
    "TruncatedLaurentSeries",
    "one_series",
    "scalar_series",
    "series_from_terms",
    "windows_agree",
    "zero_series",
    "EMPTY_WORD",
    "HopfElement",
    "Letter",
    "Word",
    "coproduct",
    "counit",
    "differentiate",
    "quasi_shuffle",
    "reduced_coproduct",
    "Character",
    "CheckReport",
    "DecompositionSession",
    "PrecisionBudget",
    "convolve",
    "verify_differential_compatibility",
    "argument_word",
    "decomposition_session",
    "expansion_character",
    "numeric_oracle",
    "one_var_series",
    "regularized_expansion",
    "renorm_directional",
    "renorm_mzv",
    "renormalized_series",
    "symmetrized_zero",
    "SUITES",
    "run_suite",
    "__version__",
]
