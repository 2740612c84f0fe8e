"""Verification toolkit for transform orders on Beta distributions.

The package decides stochastic dominance, the star-shaped order, and the
convex transform order between Beta laws in closed form, checks the same
relations numerically through sign patterns of CDF differences, walks
the cubic reduction that underpins the closed-form criterion, and
evaluates the downstream consequences: exceedance probabilities and
their monotonicity, bounds, the binomial bridge, and mode-median-mean
inequalities.  The :mod:`betaorders.cli` module exposes all of it on the
command line.
"""

from .consequences import (
    ExceedanceRow,
    MmmReport,
    MonotonicityReport,
    OrderingError,
    beta_binomial_identity_check,
    binomial_monotonicity,
    bounds_check,
    exceedance_row,
    jensen_exceedance_compare,
    mmm_check,
    scan_monotone,
)
from .distributions import (
    BetaParams,
    BinomialParams,
    GammaParams,
    ShapeClass,
    ShapeClassError,
    avg_hazard_rate,
    beta_cdf,
    beta_mean,
    beta_median,
    beta_mode_or_antimode,
    beta_pdf,
    beta_quantile,
    binomial_cdf,
    binomial_pmf,
    classify_shape,
    gamma_cdf,
    gamma_pdf,
    gamma_quantile,
    hazard_rate,
    skew_class,
)
from .orders import (
    AffineMap,
    CheckWitness,
    DEFAULT_SEED,
    LemmaCubic,
    NumericCheckReport,
    OrderKind,
    OrderResult,
    OrderVerdict,
    beta_vs_gamma_check,
    cubic_sign_pattern,
    decide_beta_order,
    lemma_cubic,
    lemma_stage_eval,
    mirror_check,
    sample_affine_maps,
    sample_slopes,
    verify_convex_numeric,
    verify_lemma_chain,
    verify_st_numeric,
    verify_star_numeric,
)
from .signpattern import (
    DEFAULT_GRID,
    DEFAULT_ZERO_TOL,
    EMPTY,
    GridPolicy,
    Sign,
    SignPattern,
    pattern_of_function,
    pattern_of_samples,
)
from .specialfns import Accuracy, DEFAULT_ACCURACY, DomainError

__version__ = "0.1.0"

__all__ = [
    "Accuracy",
    "AffineMap",
    "BetaParams",
    "BinomialParams",
    "CheckWitness",
    "DEFAULT_ACCURACY",
    "DEFAULT_GRID",
    "DEFAULT_SEED",
    "DEFAULT_ZERO_TOL",
    "DomainError",
    "EMPTY",
    "ExceedanceRow",
    "GammaParams",
    "GridPolicy",
    "LemmaCubic",
    "MmmReport",
    "MonotonicityReport",
    "NumericCheckReport",
    "OrderKind",
    "OrderResult",
    "OrderVerdict",
    "OrderingError",
    "ShapeClass",
    "ShapeClassError",
    "Sign",
    "SignPattern",
    "avg_hazard_rate",
    "beta_binomial_identity_check",
    "beta_cdf",
    "beta_mean",
    "beta_median",
    "beta_mode_or_antimode",
    "beta_pdf",
    "beta_quantile",
    "beta_vs_gamma_check",
    "binomial_cdf",
    "binomial_monotonicity",
    "binomial_pmf",
    "bounds_check",
    "classify_shape",
    "cubic_sign_pattern",
    "decide_beta_order",
    "exceedance_row",
    "gamma_cdf",
    "gamma_pdf",
    "gamma_quantile",
    "hazard_rate",
    "jensen_exceedance_compare",
    "lemma_cubic",
    "lemma_stage_eval",
    "mirror_check",
    "mmm_check",
    "pattern_of_function",
    "pattern_of_samples",
    "sample_affine_maps",
    "sample_slopes",
    "scan_monotone",
    "skew_class",
    "verify_convex_numeric",
    "verify_lemma_chain",
    "verify_st_numeric",
    "verify_star_numeric",
]
