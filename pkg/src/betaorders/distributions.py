"""Parameter records and derived quantities for Beta, Gamma, Binomial.

Densities, distribution functions, quantiles, moments, mode/anti-mode
classification, and hazard rates. Everything numerical delegates to the
specialfns layer; the scalar entry points also accept numpy arrays where
that is useful for grid work (cdf, quantile, pdf).
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass

import numpy as np

from .specialfns import (
    DEFAULT_ACCURACY,
    Accuracy,
    DomainError,
    inv_reg_inc_beta,
    inv_reg_inc_beta_many,
    inv_reg_inc_gamma,
    inv_reg_inc_gamma_many,
    log_beta,
    log_gamma,
    reg_inc_beta,
    reg_inc_beta_many,
    reg_inc_gamma,
    reg_inc_gamma_many,
)

__all__ = [
    "BetaParams",
    "GammaParams",
    "BinomialParams",
    "ShapeClass",
    "ShapeClassError",
    "beta_pdf",
    "beta_cdf",
    "beta_quantile",
    "beta_mean",
    "beta_mode_or_antimode",
    "beta_median",
    "classify_shape",
    "hazard_rate",
    "avg_hazard_rate",
    "gamma_cdf",
    "gamma_quantile",
    "gamma_pdf",
    "binomial_pmf",
    "binomial_cdf",
    "skew_class",
]

# survival mass below this counts as "F(x)=1" and hazards report infinity
_HAZARD_EPS = DEFAULT_ACCURACY.abs_tol


class ShapeClassError(ValueError):
    """The density shape does not admit the requested feature."""


@dataclass(frozen=True, slots=True)
class BetaParams:
    a: float
    b: float

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0 and math.isfinite(self.a) and math.isfinite(self.b)):
            raise DomainError(f"Beta shapes must be finite and positive, got {self}")


@dataclass(frozen=True, slots=True)
class GammaParams:
    shape: float
    scale: float

    def __post_init__(self):
        ok = self.shape > 0 and self.scale > 0
        if not (ok and math.isfinite(self.shape) and math.isfinite(self.scale)):
            raise DomainError(f"Gamma parameters must be finite and positive, got {self}")


@dataclass(frozen=True, slots=True)
class BinomialParams:
    n: int
    p: float

    def __post_init__(self):
        if not isinstance(self.n, numbers.Integral) or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n}")
        if math.isnan(self.p) or not 0.0 <= self.p <= 1.0:
            raise DomainError(f"p must lie in [0, 1], got {self.p}")


@dataclass(frozen=True, slots=True)
class ShapeClass:
    """Density shape of a Beta law: where its interior extremum sits, if any."""

    kind: str
    location: float | None = None

    _KINDS = ("unimodal", "uniantimodal", "monotone-density", "uniform")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown shape kind {self.kind!r}")
        has_extremum = self.kind in ("unimodal", "uniantimodal")
        if has_extremum and self.location is None:
            raise ValueError(f"{self.kind} requires a location")
        if not has_extremum and self.location is not None:
            raise ValueError(f"{self.kind} admits no location")
        if self.location is not None and not 0.0 <= self.location <= 1.0:
            raise ValueError(f"location must lie in [0, 1], got {self.location}")


def _pdf_values(a: float, b: float, x: np.ndarray) -> np.ndarray:
    ln_b = log_beta(a, b)
    return np.exp((a - 1.0) * np.log(x) + (b - 1.0) * np.log1p(-x) - ln_b)


def beta_pdf(params: BetaParams, x):
    """Density of Beta(a,b) at x in (0,1); accepts a float or an ndarray."""
    if isinstance(x, np.ndarray):
        if x.size and not (np.all(x > 0.0) and np.all(x < 1.0)):
            raise DomainError("pdf arguments must lie strictly inside (0, 1)")
        return _pdf_values(params.a, params.b, x)
    if math.isnan(x) or not 0.0 < x < 1.0:
        raise DomainError(f"pdf argument must lie strictly inside (0, 1), got {x}")
    return float(_pdf_values(params.a, params.b, np.float64(x)))


def beta_cdf(params: BetaParams, x, acc: Accuracy = DEFAULT_ACCURACY):
    """CDF of Beta(a,b); accepts a float or an ndarray of points in [0,1]."""
    if isinstance(x, np.ndarray):
        if x.size and not (np.all(x >= 0.0) and np.all(x <= 1.0)):
            raise DomainError("cdf arguments must lie in [0, 1]")
        return reg_inc_beta_many(x, params.a, params.b, acc)
    return reg_inc_beta(x, params.a, params.b, acc)


def beta_quantile(params: BetaParams, u, acc: Accuracy = DEFAULT_ACCURACY):
    """Quantile of Beta(a,b); accepts a float or an ndarray of levels in [0,1]."""
    if isinstance(u, np.ndarray):
        if u.size and not (np.all(u >= 0.0) and np.all(u <= 1.0)):
            raise DomainError("quantile levels must lie in [0, 1]")
        return inv_reg_inc_beta_many(u, params.a, params.b, acc)
    return inv_reg_inc_beta(u, params.a, params.b, acc)


def beta_mean(params: BetaParams) -> float:
    return params.a / (params.a + params.b)


def classify_shape(params: BetaParams) -> ShapeClass:
    """Shape of the density: interior mode, interior anti-mode, or neither."""
    a, b = params.a, params.b
    if a > 1 and b > 1:
        return ShapeClass("unimodal", (a - 1) / (a + b - 2))
    if a < 1 and b < 1:
        return ShapeClass("uniantimodal", (a - 1) / (a + b - 2))
    if a == 1 and b == 1:
        return ShapeClass("uniform")
    return ShapeClass("monotone-density")


def beta_mode_or_antimode(params: BetaParams) -> ShapeClass:
    """Interior extremum of the density.

    Raises ShapeClassError when the density is monotone or flat, where
    (a-1)/(a+b-2) degenerates and no interior extremum exists.
    """
    shape = classify_shape(params)
    if shape.kind in ("monotone-density", "uniform"):
        raise ShapeClassError(
            f"Beta({params.a}, {params.b}) has a {shape.kind} density; "
            "no interior mode or anti-mode"
        )
    return shape


def beta_median(params: BetaParams, acc: Accuracy = DEFAULT_ACCURACY) -> float:
    return inv_reg_inc_beta(0.5, params.a, params.b, acc)


def _survival(params: BetaParams, x: float) -> float:
    # reflected evaluation keeps relative precision in the right tail
    return reg_inc_beta(1.0 - x, params.b, params.a)


def hazard_rate(params: BetaParams, x: float) -> float:
    """f(x) / (1 - F(x)); infinity once the survival mass is below tolerance."""
    if math.isnan(x) or not 0.0 < x < 1.0:
        raise DomainError(f"hazard argument must lie strictly inside (0, 1), got {x}")
    surv = _survival(params, x)
    if surv <= _HAZARD_EPS:
        return math.inf
    return beta_pdf(params, x) / surv


def avg_hazard_rate(params: BetaParams, x: float) -> float:
    """-ln(1 - F(x)) / x; infinity once the survival mass is below tolerance."""
    if math.isnan(x) or not 0.0 < x < 1.0:
        raise DomainError(f"hazard argument must lie strictly inside (0, 1), got {x}")
    surv = _survival(params, x)
    if surv <= _HAZARD_EPS:
        return math.inf
    return -math.log(surv) / x


def gamma_cdf(params: GammaParams, x, acc: Accuracy = DEFAULT_ACCURACY):
    """CDF of Gamma(shape, scale); accepts a float or an ndarray."""
    if isinstance(x, np.ndarray):
        if x.size and not np.all(x >= 0.0):
            raise DomainError("cdf arguments must be nonnegative")
        return reg_inc_gamma_many(x / params.scale, params.shape, acc)
    if math.isnan(x) or x < 0:
        raise DomainError(f"cdf argument must be nonnegative, got {x}")
    return reg_inc_gamma(x / params.scale, params.shape, acc)


def gamma_quantile(params: GammaParams, u, acc: Accuracy = DEFAULT_ACCURACY):
    """Quantile of Gamma(shape, scale); levels must lie in [0, 1)."""
    if isinstance(u, np.ndarray):
        if u.size and not (np.all(u >= 0.0) and np.all(u < 1.0)):
            raise DomainError("quantile levels must lie in [0, 1)")
        return params.scale * inv_reg_inc_gamma_many(u, params.shape, acc)
    return params.scale * inv_reg_inc_gamma(u, params.shape, acc)


def _gamma_pdf_values(shape: float, scale: float, x: np.ndarray) -> np.ndarray:
    z = x / scale
    return np.exp((shape - 1.0) * np.log(z) - z - log_gamma(shape)) / scale


def gamma_pdf(params: GammaParams, x):
    """Density of Gamma(shape, scale) at x > 0; accepts a float or an ndarray."""
    if isinstance(x, np.ndarray):
        if x.size and not np.all(x > 0.0):
            raise DomainError("pdf arguments must be positive")
        return _gamma_pdf_values(params.shape, params.scale, x)
    if math.isnan(x) or x <= 0:
        raise DomainError(f"pdf argument must be positive, got {x}")
    return float(_gamma_pdf_values(params.shape, params.scale, np.float64(x)))


def _binomial_log_pmf(n: int, k: int, p: float) -> float:
    coeff = log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0)
    return coeff + k * math.log(p) + (n - k) * math.log1p(-p)


def binomial_pmf(params: BinomialParams, k: int) -> float:
    """P(B = k) via log-gamma binomial coefficients."""
    n, p = params.n, params.p
    if not isinstance(k, numbers.Integral) or not 0 <= k <= n:
        raise DomainError(f"k must be an integer in [0, {n}], got {k}")
    if p == 0.0:
        return 1.0 if k == 0 else 0.0
    if p == 1.0:
        return 1.0 if k == n else 0.0
    return math.exp(_binomial_log_pmf(n, int(k), p))


def binomial_cdf(params: BinomialParams, k: int) -> float:
    """P(B <= k), ascending-k compensated summation of the pmf."""
    n = params.n
    if not isinstance(k, numbers.Integral) or not 0 <= k <= n:
        raise DomainError(f"k must be an integer in [0, {n}], got {k}")
    total = 0.0
    carry = 0.0
    for j in range(int(k) + 1):
        term = binomial_pmf(params, j)
        y = term - carry
        t = total + y
        carry = (t - total) - y
        total = t
    return min(total, 1.0)


def skew_class(params: BetaParams) -> str:
    """'positive' when a < b, 'negative' when a > b, else 'symmetric'."""
    if params.a < params.b:
        return "positive"
    if params.a > params.b:
        return "negative"
    return "symmetric"
